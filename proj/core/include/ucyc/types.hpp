#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ucyc/errors.hpp"

namespace ucyc {

using Tuple = std::vector<int>;

/// Which classes participate in a graph or packing build.
enum class Filter { GoodOnly, AwesomeOnly };

std::string to_string(Filter f);
Filter parse_filter(const std::string& s);

/// Lexicographically smallest rotation of a cyclic tuple.
Tuple smallest_rotation(const Tuple& t);

/// A k-element subset of [1..n], kept sorted.
struct Subset {
    int n = 0;
    Tuple elems;

    Subset() = default;
    Subset(int n, Tuple elems); // validates: strictly increasing, in range, 2 <= k <= n-2

    int k() const { return static_cast<int>(elems.size()); }
    auto operator<=>(const Subset&) const = default;
};

/// Cyclic tuple of consecutive differences of a subset, entries >= 1 summing to
/// exactly n. Stored as the lexicographically smallest rotation, so equality is
/// rotation-invariant. Entry sums that are larger multiples of n are rejected.
struct Form {
    int n = 0;
    Tuple entries;

    Form() = default;
    Form(int n, Tuple entries); // canonicalizes; throws on invalid entries

    int k() const { return static_cast<int>(entries.size()); }
    auto operator<=>(const Form&) const = default;
};

/// A form with one occurrence of a unique entry removed: the k-1 remaining
/// entries in cyclic order starting just after the dropped one.
struct FormRep {
    Tuple entries;
    int dropped = 0;

    Tuple prefix() const { return Tuple(entries.begin(), entries.end() - 1); }
    Tuple suffix() const { return Tuple(entries.begin() + 1, entries.end()); }

    /// Re-append the dropped value and canonicalize; inverse of choose_rep.
    Form reattach(int n) const;

    auto operator<=>(const FormRep&) const = default;
};

/// Multiset of entry multiplicities of a form's distinct values, sorted
/// descending; a partition of k.
struct Pattern {
    Tuple parts;

    Pattern() = default;
    explicit Pattern(Tuple parts); // sorts descending, validates parts >= 1

    int total() const;                                 // sum of parts = k
    int t() const { return static_cast<int>(parts.size()); }
    auto operator<=>(const Pattern&) const = default;
};

/// Multiset of a form's entry values: (value, multiplicity) pairs with distinct
/// values, ascending. All forms sharing the multiset belong to this class.
struct ClassSig {
    std::vector<std::pair<int, int>> items;

    ClassSig() = default;
    explicit ClassSig(std::vector<std::pair<int, int>> items); // sorts, validates

    int total() const; // sum value*mult (= n)
    int size() const;  // sum mult (= k)
    Tuple singleton_values() const; // values with multiplicity 1, ascending
    Tuple values_flat() const;      // all values with repetition, ascending

    auto operator<=>(const ClassSig&) const = default;
};

struct ClassStatus {
    bool is_good = false;
    bool is_awesome = false;
    std::optional<int> largest_singleton;
};

std::string to_string(const Tuple& t);    // "(2,2,4)", "()" for empty
std::string to_string(const Subset& s);   // "{1,3,5}"
std::string to_string(const Form& f);
std::string to_string(const FormRep& r);  // "(2,2);4"
std::string to_string(const Pattern& p);  // "<2,1,1>"
std::string to_string(const ClassSig& c); // "[1,2,2;5]" if good, "[1,1,3,3]" if bad

} // namespace ucyc
