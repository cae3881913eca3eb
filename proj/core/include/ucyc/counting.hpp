#pragma once

#include <optional>
#include <vector>

#include "ucyc/classes.hpp"
#include "ucyc/types.hpp"

namespace ucyc {

/// Binomial coefficient in 64 bits; throws OverflowError if it does not fit.
unsigned long long binomial(long long n, long long k);

/// psi: ordered tuples (x_1..x_t), x_j >= 0, with sum p_j*x_j = n.
/// Exact dynamic program, O(t*n).
long long psi_exact(const Pattern& p, int n);

/// psi': ordered tuples with x_j >= 1 and pairwise distinct x_j.
/// Depth-first enumeration; throws BudgetExceededError past node_budget.
long long psi_prime_exact(const Pattern& p, int n, long long node_budget = 200'000'000);

/// n^{t-1} / ((t-1)! Q) with Q the product of the parts.
double psi_asym(const Pattern& p, int n);

/// (n-k)^{t-1}/((t-1)! Q g^{t-1}) - (n-k)^{t-2}/((t-2)! Q g^{t-2}) * sum_{i<j} p_i p_j/(p_i+p_j),
/// the second term taken as 0 when t = 1. g = gcd of the parts, k their sum.
double psi_prime_asym(const Pattern& p, int n);

struct CensusRow {
    Pattern pattern;
    bool good = false;
    long long class_count = 0;        // deduplicated value->mult maps
    long long psi_prime_ordered = 0;  // class_count * ordered_solutions_per_class
    double asym_class_count = 0.0;    // psi_prime_asym value, reported verbatim
    bool asym_divisible = true;       // g | (n - k); false rows are flagged
    long long form_count = 0;
    long long set_count = 0;
};

struct CrossRatio {
    Pattern bad_pattern;
    Pattern good_image; // phi(bad_pattern)
    long long bad_classes = 0;
    long long good_classes = 0;
    std::optional<double> ratio; // absent when the image has no classes
};

struct Census {
    int n = 0, k = 0;
    std::vector<CensusRow> rows; // one per partition of k, pattern order
    unsigned long long total_subsets = 0; // C(n,k)
    long long total_sets = 0;             // sum over forms of |sets_of_form|
    long long good_sets = 0, bad_sets = 0, awesome_sets = 0;
    long long good_classes = 0, bad_classes = 0, awesome_classes = 0;
    long long good_forms = 0, bad_forms = 0;
    std::vector<CrossRatio> cross_ratios; // one per bad pattern
    double good_set_fraction() const;
    double awesome_set_fraction() const;
};

/// Exact per-pattern counts by full enumeration (classes -> forms -> sets).
/// Throws BudgetExceededError when C(n,k) exceeds the budget.
Census census(int n, int k, unsigned long long subset_budget = 10'000'000ULL);

struct NonAwesomeCount {
    long long exact = 0;          // good classes whose only singleton value is 1
    std::optional<double> asym;   // absent when n <= 2k
};

/// Exact and asymptotic counts of non-awesome good classes. The asymptotic
/// value sums (n-2k-1)^{t-2}/((t-2)! g^{t-2} Q) over patterns with exactly one
/// part equal to 1, with g the gcd of the parts >= 2.
NonAwesomeCount non_awesome_classes(int n, int k);

} // namespace ucyc
