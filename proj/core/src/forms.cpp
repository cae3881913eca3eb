#include "ucyc/forms.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ucyc {

Form form_of(const Subset& s) {
    const int k = s.k();
    Tuple f(k);
    for (int i = 0; i + 1 < k; ++i) f[i] = s.elems[i + 1] - s.elems[i];
    f[k - 1] = ((s.elems[0] - s.elems[k - 1]) % s.n + s.n) % s.n;
    return Form(s.n, f);
}

std::vector<Subset> sets_of_form(const Form& f) {
    const int n = f.n, k = f.k();
    // one realization from partial sums, then every translate, deduplicated
    Tuple base(k);
    base[0] = 1;
    for (int i = 1; i < k; ++i) base[i] = base[i - 1] + f.entries[i - 1];
    std::set<Tuple> seen;
    for (int t = 0; t < n; ++t) {
        Tuple s(k);
        for (int i = 0; i < k; ++i) s[i] = (base[i] - 1 + t) % n + 1;
        std::sort(s.begin(), s.end());
        seen.insert(std::move(s));
    }
    std::vector<Subset> out;
    out.reserve(seen.size());
    for (const auto& s : seen) out.emplace_back(n, s);
    return out;
}

int cyclic_symmetry_order(const Form& f) {
    const int k = f.k();
    int order = 0;
    Tuple rot = f.entries;
    for (int r = 0; r < k; ++r) {
        if (rot == f.entries) ++order;
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    }
    return order;
}

namespace {

Pattern multiplicity_pattern(const Tuple& values) {
    std::map<int, int> mult;
    for (int v : values) ++mult[v];
    Tuple parts;
    parts.reserve(mult.size());
    for (auto [v, m] : mult) parts.push_back(m);
    return Pattern(parts);
}

} // namespace

Pattern pattern_of(const Form& f) { return multiplicity_pattern(f.entries); }

Pattern pattern_of(const ClassSig& c) {
    Tuple parts;
    parts.reserve(c.items.size());
    for (auto [v, m] : c.items) parts.push_back(m);
    return Pattern(parts);
}

ClassSig class_of(const Form& f) {
    std::map<int, int> mult;
    for (int v : f.entries) ++mult[v];
    std::vector<std::pair<int, int>> items(mult.begin(), mult.end());
    return ClassSig(items);
}

Tuple unique_values(const Form& f) {
    std::map<int, int> mult;
    for (int v : f.entries) ++mult[v];
    Tuple out;
    for (auto [v, m] : mult)
        if (m == 1) out.push_back(v);
    return out;
}

FormRep choose_rep(const Form& f, std::optional<int> drop_value) {
    Tuple uniq = unique_values(f);
    if (uniq.empty()) throw BadFormError("no unique entry in form " + to_string(f));
    int drop = drop_value.value_or(uniq.back());
    if (!std::binary_search(uniq.begin(), uniq.end(), drop))
        throw InvalidDropError("value " + std::to_string(drop) + " is not unique in form " + to_string(f));
    const int k = f.k();
    int at = static_cast<int>(std::find(f.entries.begin(), f.entries.end(), drop) - f.entries.begin());
    FormRep rep;
    rep.dropped = drop;
    rep.entries.reserve(k - 1);
    for (int j = 1; j < k; ++j) rep.entries.push_back(f.entries[(at + j) % k]);
    return rep;
}

std::vector<Form> all_forms(int n, int k) {
    if (k < 2 || k > n - 2) throw Error("all_forms: requires 2 <= k <= n-2");
    std::set<Tuple> canon;
    Tuple cur(k);
    // compositions of n into k positive parts, canonicalized by rotation
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == k - 1) {
            if (rem >= 1) {
                cur[pos] = rem;
                canon.insert(smallest_rotation(cur));
            }
            return;
        }
        const int maxv = rem - (k - 1 - pos);
        for (int v = 1; v <= maxv; ++v) {
            cur[pos] = v;
            self(self, pos + 1, rem - v);
        }
    };
    rec(rec, 0, n);
    std::vector<Form> out;
    out.reserve(canon.size());
    for (const auto& t : canon) out.emplace_back(n, t);
    return out;
}

} // namespace ucyc
