#include "ucyc/types.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ucyc {

std::string to_string(Filter f) {
    return f == Filter::GoodOnly ? "good" : "awesome";
}

Filter parse_filter(const std::string& s) {
    if (s == "good") return Filter::GoodOnly;
    if (s == "awesome") return Filter::AwesomeOnly;
    throw Error("unknown filter: " + s);
}

Tuple smallest_rotation(const Tuple& t) {
    if (t.empty()) return t;
    Tuple best = t;
    Tuple rot = t;
    for (size_t i = 1; i < t.size(); ++i) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return best;
}

Subset::Subset(int n_, Tuple elems_) : n(n_), elems(std::move(elems_)) {
    const int k = static_cast<int>(elems.size());
    if (n < 4) throw Error("subset: modulus must be at least 4");
    if (k < 2 || k > n - 2) throw Error("subset: requires 2 <= k <= n-2");
    for (int i = 0; i < k; ++i) {
        if (elems[i] < 1 || elems[i] > n) throw Error("subset: element out of [1..n]");
        if (i > 0 && elems[i] <= elems[i - 1]) throw Error("subset: elements must be strictly increasing");
    }
}

Form::Form(int n_, Tuple entries_) : n(n_), entries(std::move(entries_)) {
    if (entries.empty()) throw Error("form: empty entry tuple");
    long long sum = 0;
    for (int e : entries) {
        if (e < 1) throw Error("form: entries must be positive");
        sum += e;
    }
    if (sum != n) throw Error("form: entries must sum to exactly n (crossing forms rejected)");
    entries = smallest_rotation(entries);
}

Form FormRep::reattach(int n) const {
    Tuple full = entries;
    full.push_back(dropped);
    return Form(n, full);
}

Pattern::Pattern(Tuple parts_) : parts(std::move(parts_)) {
    for (int p : parts) {
        if (p < 1) throw Error("pattern: parts must be positive");
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
}

int Pattern::total() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

ClassSig::ClassSig(std::vector<std::pair<int, int>> items_) : items(std::move(items_)) {
    std::sort(items.begin(), items.end());
    for (size_t i = 0; i < items.size(); ++i) {
        if (items[i].first < 1 || items[i].second < 1) throw Error("class: values and multiplicities must be positive");
        if (i > 0 && items[i].first == items[i - 1].first) throw Error("class: values must be distinct");
    }
}

int ClassSig::total() const {
    int s = 0;
    for (auto [v, m] : items) s += v * m;
    return s;
}

int ClassSig::size() const {
    int s = 0;
    for (auto [v, m] : items) s += m;
    return s;
}

Tuple ClassSig::singleton_values() const {
    Tuple out;
    for (auto [v, m] : items)
        if (m == 1) out.push_back(v);
    return out;
}

Tuple ClassSig::values_flat() const {
    Tuple out;
    for (auto [v, m] : items)
        for (int i = 0; i < m; ++i) out.push_back(v);
    return out;
}

namespace {

std::string join(const Tuple& t, char sep) {
    std::ostringstream os;
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) os << sep;
        os << t[i];
    }
    return os.str();
}

} // namespace

std::string to_string(const Tuple& t) { return "(" + join(t, ',') + ")"; }

std::string to_string(const Subset& s) { return "{" + join(s.elems, ',') + "}"; }

std::string to_string(const Form& f) { return to_string(f.entries); }

std::string to_string(const FormRep& r) {
    return to_string(r.entries) + ";" + std::to_string(r.dropped);
}

std::string to_string(const Pattern& p) { return "<" + join(p.parts, ',') + ">"; }

std::string to_string(const ClassSig& c) {
    // Written in the ascending class convention: good classes show the largest
    // singleton last after a semicolon, bad classes list all entries.
    Tuple singles = c.singleton_values();
    Tuple flat = c.values_flat();
    if (singles.empty()) return "[" + join(flat, ',') + "]";
    const int ct = singles.back();
    auto it = std::find(flat.begin(), flat.end(), ct);
    flat.erase(it);
    return "[" + join(flat, ',') + ";" + std::to_string(ct) + "]";
}

} // namespace ucyc
