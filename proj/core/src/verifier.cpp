#include "ucyc/verifier.hpp"

#include <algorithm>
#include <map>

namespace ucyc {

std::string to_string(SeqClass c) {
    switch (c) {
        case SeqClass::Ucycle: return "ucycle";
        case SeqClass::Packing: return "packing";
        default: return "invalid";
    }
}

double VerifyReport::coverage_ratio() const {
    return total_subsets ? static_cast<double>(distinct_covered) / static_cast<double>(total_subsets) : 0.0;
}

std::vector<Tuple> windows(const std::vector<int>& seq, int k, int n) {
    if (seq.empty()) throw Error("windows: empty sequence");
    if (k < 1) throw Error("windows: k must be positive");
    if (n > 0) {
        for (int s : seq)
            if (s < 1 || s > n)
                throw SymbolOutOfRangeError("symbol " + std::to_string(s) + " outside [1.." + std::to_string(n) + "]");
    }
    const long long m = static_cast<long long>(seq.size());
    std::vector<Tuple> out;
    out.reserve(seq.size());
    for (long long i = 0; i < m; ++i) {
        Tuple w(k);
        for (int j = 0; j < k; ++j) w[j] = seq[(i + j) % m];
        out.push_back(std::move(w));
    }
    return out;
}

namespace {

// standalone binomial: the verifier stays independent of the counting module
unsigned long long binom_ull(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        unsigned long long num = static_cast<unsigned long long>(n - k + i);
        if (r > ~0ULL / num) throw OverflowError("binomial overflows 64 bits");
        r = r * num / static_cast<unsigned long long>(i);
    }
    return r;
}

} // namespace

VerifyReport verify(const std::vector<int>& seq, int n, int k) {
    if (n < 1 || k < 1) throw Error("verify: n and k must be positive");
    VerifyReport rep;
    rep.n = n;
    rep.k = k;
    rep.length = static_cast<long long>(seq.size());
    rep.total_subsets = binom_ull(n, k);

    for (long long i = 0; i < rep.length; ++i) {
        const int s = seq[i];
        if (s < 1 || s > n)
            throw SymbolOutOfRangeError("symbol " + std::to_string(s) + " at position " + std::to_string(i) +
                                        " outside [1.." + std::to_string(n) + "]");
    }

    const long long m = rep.length;
    rep.windows_total = m;
    Tuple w(k);
    if (n <= 255 && k <= 8) {
        // packed fast path; big-endian byte packing keeps subset order
        std::vector<std::pair<uint64_t, long long>> keyed;
        keyed.reserve(m);
        for (long long i = 0; i < m; ++i) {
            for (int j = 0; j < k; ++j) w[j] = seq[(i + j) % m];
            std::sort(w.begin(), w.end());
            if (std::adjacent_find(w.begin(), w.end()) != w.end()) {
                rep.invalid_windows.push_back(i);
                continue;
            }
            uint64_t key = 0;
            for (int j = 0; j < k; ++j) key = key << 8 | static_cast<uint64_t>(w[j]);
            keyed.emplace_back(key, i);
        }
        std::sort(keyed.begin(), keyed.end());
        for (size_t i = 0; i < keyed.size();) {
            size_t j = i;
            while (j < keyed.size() && keyed[j].first == keyed[i].first) ++j;
            ++rep.distinct_covered;
            if (j - i > 1) {
                DuplicateSubset d;
                for (int b = k - 1; b >= 0; --b) d.subset.push_back(static_cast<int>(keyed[i].first >> 8 * b & 0xff));
                for (size_t q = i; q < j; ++q) d.positions.push_back(keyed[q].second);
                rep.duplicate_subsets.push_back(std::move(d));
            }
            i = j;
        }
    } else {
        std::map<Tuple, std::vector<long long>> occurrences;
        for (long long i = 0; i < m; ++i) {
            for (int j = 0; j < k; ++j) w[j] = seq[(i + j) % m];
            Tuple sorted = w;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
                rep.invalid_windows.push_back(i);
                continue;
            }
            occurrences[sorted].push_back(i);
        }
        rep.distinct_covered = static_cast<long long>(occurrences.size());
        for (auto& [subset, positions] : occurrences) {
            if (positions.size() > 1) rep.duplicate_subsets.push_back({subset, positions});
        }
    }

    if (!rep.invalid_windows.empty() || !rep.duplicate_subsets.empty())
        rep.classification = SeqClass::Invalid;
    else if (static_cast<unsigned long long>(rep.distinct_covered) == rep.total_subsets &&
             static_cast<unsigned long long>(rep.length) == rep.total_subsets)
        rep.classification = SeqClass::Ucycle;
    else
        rep.classification = SeqClass::Packing;
    return rep;
}

namespace {

struct PackSearch {
    int n, k;
    unsigned long long total;
    unsigned long long budget, nodes = 0;
    bool complete = true;
    int best_len = 0;
    std::vector<int> best, seq;
    std::map<Tuple, int> used; // sorted window -> count (count is 0/1 in practice)

    bool window_at(long long i, Tuple& out) const {
        const long long m = static_cast<long long>(seq.size());
        for (int j = 0; j < k; ++j) out[j] = seq[(i + j) % m];
        std::sort(out.begin(), out.end());
        return std::adjacent_find(out.begin(), out.end()) == out.end();
    }

    void try_close() {
        const long long m = static_cast<long long>(seq.size());
        if (m <= best_len || m < k) return;
        // linear windows are already valid and unused; check the k-1 wrapping ones
        std::vector<Tuple> added;
        Tuple w(k);
        bool ok = true;
        for (long long i = m - k + 1; i < m; ++i) {
            if (!window_at(i, w) || used.count(w)) {
                ok = false;
                break;
            }
            for (const Tuple& a : added)
                if (a == w) {
                    ok = false;
                    break;
                }
            if (!ok) break;
            added.push_back(w);
        }
        if (ok) {
            best_len = static_cast<int>(m);
            best = seq;
        }
    }

    void dfs() {
        if (++nodes > budget) {
            complete = false;
            return;
        }
        try_close();
        const long long m = static_cast<long long>(seq.size());
        // each appended symbol consumes one unused subset
        if (m + static_cast<long long>(total - used.size()) <= best_len) return;
        Tuple w(k);
        for (int s = 1; s <= n && complete; ++s) {
            if (m >= k - 1) {
                bool repeat = false;
                for (long long j = m - (k - 1); j < m; ++j)
                    if (seq[j] == s) repeat = true;
                if (repeat) continue;
                for (int j = 0; j < k - 1; ++j) w[j] = seq[m - (k - 1) + j];
                w[k - 1] = s;
                std::sort(w.begin(), w.end());
                if (used.count(w)) continue;
                seq.push_back(s);
                used[w] = 1;
                dfs();
                used.erase(w);
                seq.pop_back();
            } else {
                seq.push_back(s);
                dfs();
                seq.pop_back();
            }
        }
    }
};

} // namespace

MaxPackResult exhaustive_max_packing(int n, int k, unsigned long long node_budget) {
    if (n < 2 || k < 1 || k > n) throw Error("exhaustive_max_packing: invalid n, k");
    const unsigned long long total = binom_ull(n, k);
    if (node_budget == 0) {
        if (total > 30)
            throw BudgetExceededError("exhaustive_max_packing: C(n,k) > 30; pass an explicit node budget");
        node_budget = 50'000'000ULL;
    }
    PackSearch ps{n, k, total, node_budget};
    // translation symmetry: any packing can be shifted to start at symbol 1
    ps.seq.push_back(1);
    ps.dfs();
    MaxPackResult res;
    res.best_length = ps.best_len;
    res.witness = ps.best;
    res.nodes = ps.nodes;
    res.complete = ps.complete;
    return res;
}

} // namespace ucyc
