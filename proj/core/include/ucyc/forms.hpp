#pragma once

#include <optional>
#include <vector>

#include "ucyc/types.hpp"

namespace ucyc {

/// Form of a subset: consecutive cyclic differences (s2-s1, ..., s1-sk mod n).
Form form_of(const Subset& s);

/// All subsets realizing a form: the distinct translates of one realization.
/// Count is n divided by the form's cyclic symmetry order; equals n exactly
/// when the form has a unique entry.
std::vector<Subset> sets_of_form(const Form& f);

/// Number of rotations r in [0,k) fixing the entry tuple (always >= 1).
int cyclic_symmetry_order(const Form& f);

Pattern pattern_of(const Form& f);
Pattern pattern_of(const ClassSig& c);

ClassSig class_of(const Form& f);

/// Values occurring exactly once, ascending. Empty iff the form is bad.
Tuple unique_values(const Form& f);

/// Rotate the form so drop_value sits last, then remove it. Defaults to the
/// largest unique value. The rotation is unambiguous because the dropped
/// value occurs exactly once.
FormRep choose_rep(const Form& f, std::optional<int> drop_value = {});

/// All canonical forms for (n,k), sorted.
std::vector<Form> all_forms(int n, int k);

} // namespace ucyc
