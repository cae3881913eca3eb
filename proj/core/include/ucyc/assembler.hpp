#pragma once

#include <cstdint>
#include <vector>

#include "ucyc/euler.hpp"
#include "ucyc/transition_graph.hpp"

namespace ucyc {

enum class RepStrategy { Default, Search };

std::string to_string(RepStrategy s);
RepStrategy parse_rep_strategy(const std::string& s);

/// How the per-period shift worked out, and what the representative search
/// did about it. Emitted with every packing.
struct ShiftReport {
    int sigma = 0;       // net displacement per circuit traversal, in [0, n)
    int gcd = 0;         // gcd(sigma, n), with sigma = 0 counting as n
    int L = 0;           // n / gcd: traversals before the walk closes
    bool gcd_one = false;
    bool searched = false;          // rep search ran
    bool exhausted = false;         // every flip combination was evaluated
    bool budget_exhausted = false;  // search stopped on budget
    unsigned long long combos_tried = 0;
    long long target_covered = 0;   // sets of all filtered classes (= edges * n)
    bool obstruction = false;       // covered falls short of target_covered
};

struct PackingResult {
    int n = 0, k = 0;
    std::vector<int> sequence; // cyclic, symbols in [1..n], length m*L
    long long m = 0;           // circuit edge count
    int sigma = 0;
    int L = 0;
    long long covered = 0; // distinct subsets realized (= m*L for valid builds)
    long long omitted = 0; // C(n,k) - covered
    RepChoice rep_choice;
    ShiftReport report;
};

/// Sum over circuit edges of the last rep entry, mod n: the symbol
/// displacement per full traversal.
int circuit_shift(const TransitionGraph& t, const EulerCircuit& c);

/// Emit the symbol sequence: walk the circuit L = n/gcd(sigma,n) times,
/// each edge appending prev + last(rep) mod n. Every k-window realizes the
/// subset whose difference window is some edge's rep.
PackingResult unroll(const TransitionGraph& t, const EulerCircuit& c, int start_symbol = 1);

struct RepSearchResult {
    RepChoice choice;
    ShiftReport report;
};

/// Search per-class dropped values for gcd(sigma, n) = 1, maximizing L and
/// then coverage of the main component. Exhaustive when the number of flip
/// combinations fits the budget, greedy single-flip passes otherwise. Budget
/// exhaustion returns the best found, flagged.
RepSearchResult rep_search(const ClassList& cl, unsigned long long budget = 20000, uint64_t seed = 0);

struct GenerateOptions {
    Filter filter = Filter::AwesomeOnly;
    RepStrategy strategy = RepStrategy::Default;
    int start_symbol = 1;
    uint64_t seed = 0;
    unsigned long long search_budget = 20000;
};

/// Full pipeline: classes -> filter -> transition graph -> main component ->
/// (optional rep search) -> Eulerian circuit -> unroll.
PackingResult generate_packing(int n, int k, const GenerateOptions& opts = {});

} // namespace ucyc
