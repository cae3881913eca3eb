#include "ucyc/classes.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ucyc/forms.hpp"

namespace ucyc {

std::vector<Pattern> partitions_of(int k) {
    if (k < 1) throw Error("partitions_of: k must be positive");
    std::vector<Pattern> out;
    Tuple cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, k, k);
    return out; // descending lexicographic by construction
}

bool is_good_pattern(const Pattern& p) {
    return !p.parts.empty() && p.parts.back() == 1;
}

Pattern phi(const Pattern& bad) {
    if (is_good_pattern(bad)) throw NotBadError("phi: pattern " + to_string(bad) + " already contains a 1");
    Tuple parts = bad.parts; // descending; smallest last
    parts.back() -= 1;
    parts.push_back(1);
    return Pattern(parts);
}

std::vector<ClassSig> classes_of_pattern(const Pattern& p, int n) {
    if (n < p.total()) return {};
    const int t = p.t();
    std::vector<ClassSig> out;
    std::vector<std::pair<int, int>> items; // (value, multiplicity) as assigned
    Tuple used;
    // Parts are processed in the fixed descending order. Slots with equal part
    // size take strictly increasing values, so each value->mult map is
    // generated exactly once.
    auto rec = [&](auto&& self, int slot, int rem) -> void {
        if (slot == t) {
            if (rem == 0) {
                auto sorted = items;
                out.emplace_back(ClassSig(sorted));
            }
            return;
        }
        const int part = p.parts[slot];
        int tail_min = 0; // every later slot needs value >= 1
        for (int j = slot + 1; j < t; ++j) tail_min += p.parts[j];
        int lo = 1;
        if (slot > 0 && p.parts[slot - 1] == part) lo = used.back() + 1;
        for (int v = lo; static_cast<long long>(v) * part + tail_min <= rem; ++v) {
            if (std::find(used.begin(), used.end(), v) != used.end()) continue;
            items.emplace_back(v, part);
            used.push_back(v);
            self(self, slot + 1, rem - v * part);
            used.pop_back();
            items.pop_back();
        }
    };
    rec(rec, 0, n);
    std::sort(out.begin(), out.end());
    return out;
}

long long ordered_solutions_per_class(const Pattern& p) {
    std::map<int, int> runs;
    for (int part : p.parts) ++runs[part];
    long long f = 1;
    for (auto [part, r] : runs)
        for (int i = 2; i <= r; ++i) f *= i;
    return f;
}

std::vector<Form> forms_of_class(const ClassSig& c) {
    const int n = c.total();
    Tuple vals = c.values_flat();
    std::set<Tuple> canon;
    do {
        canon.insert(smallest_rotation(vals));
    } while (std::next_permutation(vals.begin(), vals.end()));
    std::vector<Form> out;
    out.reserve(canon.size());
    for (const auto& t : canon) out.emplace_back(n, t);
    return out;
}

ClassStatus status_of(const ClassSig& c) {
    ClassStatus st;
    Tuple singles = c.singleton_values();
    st.is_good = !singles.empty();
    if (st.is_good) {
        st.largest_singleton = singles.back();
        st.is_awesome = singles.back() > 1;
    }
    return st;
}

ClassSig all_ones_class(int n, int k) {
    if (k < 2 || k > n - 2) throw Error("all_ones_class: requires 2 <= k <= n-2");
    std::vector<std::pair<int, int>> items;
    if (k >= 2) items.emplace_back(1, k - 1);
    items.emplace_back(n - k + 1, 1);
    return ClassSig(items);
}

ClassSig kappa(const ClassSig& c) {
    ClassStatus st = status_of(c);
    if (!st.is_good) throw NotGoodError("kappa: class " + to_string(c) + " has no singleton");
    std::map<int, int> m(c.items.begin(), c.items.end());
    const int ct = *st.largest_singleton;
    if (--m[ct] == 0) m.erase(ct);
    const int ct1 = m.rbegin()->first; // largest value once c_t is removed
    if (--m[ct1] == 0) m.erase(ct1);
    ++m[1];
    ++m[ct + ct1 - 1];
    std::vector<std::pair<int, int>> items(m.begin(), m.end());
    return ClassSig(items);
}

KappaPath kappa_path(const ClassSig& c, int n) {
    const int k = c.size();
    const ClassSig target = all_ones_class(n, k);
    KappaPath kp;
    kp.path.push_back(c);
    while (kp.path.back() != target) {
        const ClassSig& cur = kp.path.back();
        if (!status_of(cur).is_good) return kp; // dead end, flagged as failure
        ClassSig next = kappa(cur);
        if (next == cur) return kp; // fixed point short of the target
        kp.path.push_back(std::move(next));
        if (static_cast<int>(kp.path.size()) > k + 1)
            throw Error("kappa_path: walk exceeded the k-step bound from " + to_string(c));
    }
    kp.reached_target = true;
    return kp;
}

ClassList list_classes(int n, int k, Filter filter) {
    ClassList cl;
    cl.n = n;
    cl.k = k;
    cl.filter = filter;
    for (const Pattern& p : partitions_of(k)) {
        if (!is_good_pattern(p)) continue; // bad patterns carry only bad classes
        for (ClassSig& c : classes_of_pattern(p, n)) {
            if (filter == Filter::AwesomeOnly && !status_of(c).is_awesome) continue;
            cl.classes.push_back(std::move(c));
        }
    }
    std::sort(cl.classes.begin(), cl.classes.end());
    cl.forms.reserve(cl.classes.size());
    cl.singletons.reserve(cl.classes.size());
    for (const ClassSig& c : cl.classes) {
        cl.forms.push_back(forms_of_class(c));
        cl.singletons.push_back(c.singleton_values());
    }
    return cl;
}

} // namespace ucyc
