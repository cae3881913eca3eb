#include "ucyc/assembler.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

#include "ucyc/counting.hpp"
#include "ucyc/forms.hpp"

namespace ucyc {

std::string to_string(RepStrategy s) {
    return s == RepStrategy::Default ? "default" : "search";
}

RepStrategy parse_rep_strategy(const std::string& s) {
    if (s == "default") return RepStrategy::Default;
    if (s == "search") return RepStrategy::Search;
    throw Error("unknown rep strategy: " + s);
}

int circuit_shift(const TransitionGraph& t, const EulerCircuit& c) {
    long long s = 0;
    for (int ei : c.edge_ids) s += t.edges[ei].rep.entries.back();
    return static_cast<int>(s % t.n);
}

namespace {

long long count_distinct_windows(const std::vector<int>& seq, int n, int k) {
    const long long m = static_cast<long long>(seq.size());
    if (n <= 255 && k <= 8) {
        std::vector<uint64_t> keys;
        keys.reserve(m);
        Tuple w(k);
        for (long long i = 0; i < m; ++i) {
            for (int j = 0; j < k; ++j) w[j] = seq[(i + j) % m];
            std::sort(w.begin(), w.end());
            uint64_t key = 0;
            for (int j = 0; j < k; ++j) key = key << 8 | static_cast<uint64_t>(w[j]);
            keys.push_back(key);
        }
        std::sort(keys.begin(), keys.end());
        return static_cast<long long>(std::unique(keys.begin(), keys.end()) - keys.begin());
    }
    std::set<Tuple> seen;
    Tuple w(k);
    for (long long i = 0; i < m; ++i) {
        for (int j = 0; j < k; ++j) w[j] = seq[(i + j) % m];
        std::sort(w.begin(), w.end());
        seen.insert(w);
    }
    return static_cast<long long>(seen.size());
}

struct ChoiceEval {
    int sigma = 0, gcd = 0, L = 0;
    long long main_edges = 0;
    long long covered = 0; // main_edges * L

    bool better_than(const ChoiceEval& o) const {
        if (L != o.L) return L > o.L;
        return covered > o.covered;
    }
};

// Per-class edge lists for every admissible dropped value, interned once so a
// choice can be evaluated without touching forms again.
struct SearchTables {
    int n = 0, k = 0;
    int anchor = -1;                                  // vertex id of (1,...,1)
    int nvertices = 0;
    // tables[ci][oi] = edges of class ci under its oi-th drop option
    struct PerChoice {
        std::vector<std::pair<int, int>> edges;       // (from,to) vertex ids
        std::vector<int> last;                        // per-edge last rep entry
        long long last_sum = 0;
    };
    std::vector<std::vector<PerChoice>> tables;
    std::vector<Tuple> options;                       // drop candidates per class
};

SearchTables build_tables(const ClassList& cl) {
    SearchTables st;
    st.n = cl.n;
    st.k = cl.k;
    std::map<Tuple, int> vid;
    auto intern = [&](const Tuple& v) {
        auto [it, fresh] = vid.emplace(v, static_cast<int>(vid.size()));
        return it->second;
    };
    st.tables.resize(cl.classes.size());
    st.options.resize(cl.classes.size());
    for (size_t ci = 0; ci < cl.classes.size(); ++ci) {
        st.options[ci] = cl.singletons[ci];
        for (int drop : st.options[ci]) {
            SearchTables::PerChoice pc;
            for (const Form& f : cl.forms[ci]) {
                const FormRep rep = choose_rep(f, drop);
                pc.edges.emplace_back(intern(rep.prefix()), intern(rep.suffix()));
                pc.last.push_back(rep.entries.back());
                pc.last_sum += rep.entries.back();
            }
            st.tables[ci].push_back(std::move(pc));
        }
    }
    const Tuple anchor(static_cast<size_t>(cl.k - 2), 1);
    auto it = vid.find(anchor);
    if (it == vid.end()) throw MissingAnchorError("all-ones vertex missing during rep search");
    st.anchor = it->second;
    st.nvertices = static_cast<int>(vid.size());
    return st;
}

// drops[ci] = option index into st.options[ci]
ChoiceEval evaluate_choice(const SearchTables& st, const std::vector<int>& opt_idx) {
    const int n = st.n;
    std::vector<int> parent(st.nvertices);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t ci = 0; ci < st.tables.size(); ++ci)
        for (auto [u, v] : st.tables[ci][opt_idx[ci]].edges) parent[find(u)] = find(v);

    const int root = find(st.anchor);
    ChoiceEval ev;
    long long sigma = 0;
    for (size_t ci = 0; ci < st.tables.size(); ++ci) {
        const auto& pc = st.tables[ci][opt_idx[ci]];
        for (size_t ei = 0; ei < pc.edges.size(); ++ei) {
            if (find(pc.edges[ei].first) != root) continue;
            ++ev.main_edges;
            sigma += pc.last[ei];
        }
    }
    ev.sigma = static_cast<int>(sigma % n);
    ev.gcd = std::gcd(ev.sigma == 0 ? n : ev.sigma, n);
    ev.L = n / ev.gcd;
    ev.covered = ev.main_edges * ev.L;
    return ev;
}

} // namespace

RepSearchResult rep_search(const ClassList& cl, unsigned long long budget, uint64_t seed) {
    const int n = cl.n;
    RepSearchResult res;
    res.report.searched = true;
    for (const auto& fs : cl.forms) res.report.target_covered += static_cast<long long>(fs.size()) * n;

    const SearchTables st = build_tables(cl);
    const size_t nc = cl.classes.size();

    // option index of the default (largest singleton = last option)
    std::vector<int> best(nc);
    for (size_t ci = 0; ci < nc; ++ci) best[ci] = static_cast<int>(st.options[ci].size()) - 1;
    ChoiceEval best_ev = evaluate_choice(st, best);
    res.report.combos_tried = 1;

    std::vector<size_t> flippable;
    for (size_t ci = 0; ci < nc; ++ci)
        if (st.options[ci].size() >= 2) flippable.push_back(ci);
    if (seed != 0) {
        std::mt19937_64 rng(seed);
        std::shuffle(flippable.begin(), flippable.end(), rng);
    }

    const long long max_covered = res.report.target_covered;
    if (best_ev.covered < max_covered && !flippable.empty()) {
        unsigned long long combos = 1;
        bool small = true;
        for (size_t fi : flippable) {
            combos *= st.options[fi].size();
            if (combos > budget) {
                small = false;
                break;
            }
        }
        if (small) {
            // exhaustive odometer over the flip candidates
            std::vector<int> idx(flippable.size(), 0);
            std::vector<int> cur = best;
            for (size_t i = 0; i < flippable.size(); ++i) cur[flippable[i]] = 0;
            bool done = false;
            while (!done) {
                for (size_t i = 0; i < flippable.size(); ++i) cur[flippable[i]] = idx[i];
                ChoiceEval ev = evaluate_choice(st, cur);
                ++res.report.combos_tried;
                if (ev.better_than(best_ev)) {
                    best_ev = ev;
                    best = cur;
                }
                size_t pos = flippable.size();
                while (pos > 0) {
                    if (++idx[pos - 1] < static_cast<int>(st.options[flippable[pos - 1]].size())) break;
                    idx[pos - 1] = 0;
                    --pos;
                }
                done = pos == 0;
            }
            res.report.exhausted = true;
        } else {
            // Greedy single flips, candidates ordered by the predicted shift.
            // A flip of class C from drop c to c' moves sigma by
            // N_C (c - c') / (k-1) while C stays inside the main component, or
            // removes C's whole contribution when its cycles detach from it.
            // Candidates promising a smaller gcd either way come first.
            bool improved = true;
            while (improved && best_ev.covered < max_covered && !res.report.budget_exhausted) {
                improved = false;
                struct Cand {
                    int predicted_gcd;
                    size_t order;
                    size_t ci;
                    int oi;
                };
                std::vector<Cand> cands;
                auto gcd_of = [n](long long sig) {
                    sig %= n;
                    if (sig < 0) sig += n;
                    return std::gcd(sig == 0 ? n : static_cast<int>(sig), n);
                };
                for (size_t pos = 0; pos < flippable.size(); ++pos) {
                    const size_t ci = flippable[pos];
                    const auto& cur_pc = st.tables[ci][best[ci]];
                    for (int oi = 0; oi < static_cast<int>(st.options[ci].size()); ++oi) {
                        if (oi == best[ci]) continue;
                        const int stays = gcd_of(best_ev.sigma - cur_pc.last_sum + st.tables[ci][oi].last_sum);
                        const int detaches = gcd_of(best_ev.sigma - cur_pc.last_sum);
                        cands.push_back({std::min(stays, detaches), pos, ci, oi});
                    }
                }
                std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
                    if (a.predicted_gcd != b.predicted_gcd) return a.predicted_gcd < b.predicted_gcd;
                    if (a.order != b.order) return a.order < b.order;
                    return a.oi < b.oi;
                });
                for (const Cand& cd : cands) {
                    if (res.report.combos_tried >= budget) {
                        res.report.budget_exhausted = true;
                        break;
                    }
                    std::vector<int> cur = best;
                    cur[cd.ci] = cd.oi;
                    ChoiceEval ev = evaluate_choice(st, cur);
                    ++res.report.combos_tried;
                    if (ev.better_than(best_ev)) {
                        best_ev = ev;
                        best = std::move(cur);
                        improved = true;
                        break; // restart the pass from the improved incumbent
                    }
                }
            }
        }
    }

    for (size_t ci = 0; ci < nc; ++ci) res.choice[cl.classes[ci]] = st.options[ci][best[ci]];
    res.report.sigma = best_ev.sigma;
    res.report.gcd = best_ev.gcd;
    res.report.L = best_ev.L;
    res.report.gcd_one = best_ev.gcd == 1;
    res.report.obstruction = best_ev.covered < max_covered;
    return res;
}

PackingResult unroll(const TransitionGraph& t, const EulerCircuit& c, int start_symbol) {
    const int n = t.n, k = t.k;
    if (start_symbol < 1 || start_symbol > n) throw Error("unroll: start symbol out of [1..n]");
    PackingResult pr;
    pr.n = n;
    pr.k = k;
    pr.m = static_cast<long long>(c.edge_ids.size());
    pr.sigma = circuit_shift(t, c);
    const int g = std::gcd(pr.sigma == 0 ? n : pr.sigma, n);
    pr.L = n / g;
    pr.rep_choice = t.rep_choice;

    pr.sequence.reserve(static_cast<size_t>(pr.m) * pr.L);
    int cur = start_symbol;
    for (int pass = 0; pass < pr.L; ++pass) {
        for (int ei : c.edge_ids) {
            pr.sequence.push_back(cur);
            cur = (cur - 1 + t.edges[ei].rep.entries.back()) % n + 1;
        }
    }
    // the walk closes: L*sigma = 0 mod n
    pr.covered = count_distinct_windows(pr.sequence, n, k);
    pr.omitted = static_cast<long long>(binomial(n, k)) - pr.covered;
    pr.report.sigma = pr.sigma;
    pr.report.gcd = g;
    pr.report.L = pr.L;
    pr.report.gcd_one = g == 1;
    return pr;
}

PackingResult generate_packing(int n, int k, const GenerateOptions& opts) {
    if (k < 2 || k > n - 2) throw Error("generate: requires 2 <= k <= n-2");
    const ClassList cl = list_classes(n, k, opts.filter);

    RepChoice choice;
    ShiftReport search_report;
    if (opts.strategy == RepStrategy::Search) {
        RepSearchResult rs = rep_search(cl, opts.search_budget, opts.seed);
        choice = std::move(rs.choice);
        search_report = rs.report;
    }

    TransitionGraph t = build_transition(cl, choice);
    const auto comps = components(t);
    const int mci = main_component(t, comps);
    const EulerCircuit circuit = eulerian_circuit(t, comps[mci]);

    PackingResult pr = unroll(t, circuit, opts.start_symbol);
    if (opts.strategy == RepStrategy::Search) {
        const ShiftReport unroll_report = pr.report;
        pr.report = search_report;
        pr.report.sigma = unroll_report.sigma;
        pr.report.gcd = unroll_report.gcd;
        pr.report.L = unroll_report.L;
        pr.report.gcd_one = unroll_report.gcd_one;
    } else {
        pr.report.searched = false;
    }
    long long target = 0;
    for (const auto& fs : cl.forms) target += static_cast<long long>(fs.size()) * n;
    pr.report.target_covered = target;
    pr.report.obstruction = pr.covered < target;
    return pr;
}

} // namespace ucyc
