#pragma once

#include <vector>

#include "ucyc/types.hpp"

namespace ucyc {

/// All partitions of k, each once, in descending lexicographic order.
std::vector<Pattern> partitions_of(int k);

/// True iff some part equals 1 (every form with this pattern is good).
bool is_good_pattern(const Pattern& p);

/// Map a bad pattern to a good one: decrement the smallest part, append a 1.
/// Injective on bad partitions of k. Throws NotBadError on good input.
Pattern phi(const Pattern& bad);

/// All classes of a pattern at modulus n: assignments of distinct positive
/// values to the parts with sum(part*value) = n, deduplicated as value->mult
/// maps. Sorted, possibly empty.
std::vector<ClassSig> classes_of_pattern(const Pattern& p, int n);

/// Ordered solution tuples per deduplicated class: product over repeated part
/// sizes r of r! (constant across the pattern's classes).
long long ordered_solutions_per_class(const Pattern& p);

/// All cyclically distinct arrangements of the class multiset, canonical, sorted.
std::vector<Form> forms_of_class(const ClassSig& c);

ClassStatus status_of(const ClassSig& c);

/// The class [1^{k-1}; n-k+1], the target of kappa walks.
ClassSig all_ones_class(int n, int k);

/// One kappa step: with c_t the largest singleton and c_{t-1} the largest value
/// once one copy of c_t is removed, replace {c_t, c_{t-1}} by {1, c_t+c_{t-1}-1}.
/// Preserves the sum and the number of entries. Throws NotGoodError.
ClassSig kappa(const ClassSig& c);

struct KappaPath {
    std::vector<ClassSig> path; // starts at the input class
    bool reached_target = false;
};

/// Iterate kappa until the all-ones class (success) or a fixed point short of
/// it (failure). Path length is at most k.
KappaPath kappa_path(const ClassSig& c, int n);

/// Classes of (n,k) passing the filter, with their forms and singleton values.
/// Shared by the transition-graph build and the representative search.
struct ClassList {
    int n = 0, k = 0;
    Filter filter = Filter::AwesomeOnly;
    std::vector<ClassSig> classes;          // sorted
    std::vector<std::vector<Form>> forms;   // parallel to classes
    std::vector<Tuple> singletons;          // parallel to classes, ascending
};

ClassList list_classes(int n, int k, Filter filter);

} // namespace ucyc
