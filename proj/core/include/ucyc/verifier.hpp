#pragma once

#include <cstdint>
#include <vector>

#include "ucyc/types.hpp"

namespace ucyc {

// Ground-truth checker. Deliberately self-contained: recomputes every subset
// from the raw sequence and never consults the construction modules.

enum class SeqClass { Ucycle, Packing, Invalid };

std::string to_string(SeqClass c);

struct DuplicateSubset {
    Tuple subset;                      // sorted
    std::vector<long long> positions;  // window start positions
};

struct VerifyReport {
    int n = 0, k = 0;
    long long length = 0;
    long long windows_total = 0;
    std::vector<long long> invalid_windows;       // positions with a repeated symbol
    std::vector<DuplicateSubset> duplicate_subsets;
    long long distinct_covered = 0;
    unsigned long long total_subsets = 0;         // C(n,k)
    SeqClass classification = SeqClass::Invalid;

    double coverage_ratio() const;
};

/// All length(seq) cyclic k-windows. If n is given, symbols are range-checked
/// (SymbolOutOfRangeError).
std::vector<Tuple> windows(const std::vector<int>& seq, int k, int n = 0);

/// Classify a cyclic sequence: ucycle (every k-subset exactly once), packing
/// (every subset at most once, all windows valid), or invalid.
VerifyReport verify(const std::vector<int>& seq, int n, int k);

struct MaxPackResult {
    int best_length = 0;
    std::vector<int> witness;
    unsigned long long nodes = 0;
    bool complete = true; // false when the node budget stopped the search
};

/// Depth-first search over symbol extensions with subset-reuse pruning for the
/// longest cyclic packing. Guarded: requires C(n,k) <= 30 unless an explicit
/// node budget is passed (BudgetExceededError otherwise).
MaxPackResult exhaustive_max_packing(int n, int k, unsigned long long node_budget = 0);

} // namespace ucyc
