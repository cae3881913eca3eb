#include "ucyc/transition_graph.hpp"

#include <algorithm>
#include <map>

#include "ucyc/forms.hpp"

namespace ucyc {

int TransitionGraph::vertex_id(const Tuple& v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) return -1;
    return static_cast<int>(it - vertices.begin());
}

namespace {

int effective_drop(const ClassSig& c, const Tuple& singles, const RepChoice& overrides) {
    auto it = overrides.find(c);
    if (it == overrides.end()) return singles.back();
    if (!std::binary_search(singles.begin(), singles.end(), it->second))
        throw InvalidRepChoiceError("value " + std::to_string(it->second) +
                                    " is not a singleton of class " + to_string(c));
    return it->second;
}

} // namespace

TransitionGraph build_transition(const ClassList& cl, const RepChoice& overrides) {
    TransitionGraph t;
    t.n = cl.n;
    t.k = cl.k;
    t.filter = cl.filter;

    for (size_t ci = 0; ci < cl.classes.size(); ++ci) {
        const int drop = effective_drop(cl.classes[ci], cl.singletons[ci], overrides);
        t.rep_choice[cl.classes[ci]] = drop;
        for (const Form& f : cl.forms[ci]) {
            TransitionEdge e;
            e.rep = choose_rep(f, drop);
            e.from = e.rep.prefix();
            e.to = e.rep.suffix();
            e.form = f;
            e.cls = cl.classes[ci];
            t.edges.push_back(std::move(e));
        }
    }
    std::sort(t.edges.begin(), t.edges.end(), [](const TransitionEdge& a, const TransitionEdge& b) {
        if (a.from != b.from) return a.from < b.from;
        if (a.to != b.to) return a.to < b.to;
        return a.rep < b.rep;
    });

    for (const TransitionEdge& e : t.edges) {
        t.vertices.push_back(e.from);
        t.vertices.push_back(e.to);
    }
    std::sort(t.vertices.begin(), t.vertices.end());
    t.vertices.erase(std::unique(t.vertices.begin(), t.vertices.end()), t.vertices.end());

    t.out_edges.assign(t.vertices.size(), {});
    t.in_edges.assign(t.vertices.size(), {});
    for (size_t ei = 0; ei < t.edges.size(); ++ei) {
        t.out_edges[t.vertex_id(t.edges[ei].from)].push_back(static_cast<int>(ei));
        t.in_edges[t.vertex_id(t.edges[ei].to)].push_back(static_cast<int>(ei));
    }
    return t;
}

TransitionGraph build_transition(int n, int k, Filter filter, const RepChoice& overrides) {
    return build_transition(list_classes(n, k, filter), overrides);
}

DegreeReport degree_report(const TransitionGraph& t) {
    DegreeReport r;
    r.in_out.reserve(t.vertices.size());
    r.is_even = true;
    for (size_t v = 0; v < t.vertices.size(); ++v) {
        const int in = static_cast<int>(t.in_edges[v].size());
        const int out = static_cast<int>(t.out_edges[v].size());
        r.in_out.emplace_back(in, out);
        if (in != out) r.is_even = false;
    }
    return r;
}

std::vector<std::vector<int>> components(const TransitionGraph& t) {
    const int nv = static_cast<int>(t.vertices.size());
    std::vector<int> parent(nv);
    for (int i = 0; i < nv; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const TransitionEdge& e : t.edges)
        parent[find(t.vertex_id(e.from))] = find(t.vertex_id(e.to));

    std::map<int, std::vector<int>> groups; // root -> edge ids (ids ascend per group)
    for (size_t ei = 0; ei < t.edges.size(); ++ei)
        groups[find(t.vertex_id(t.edges[ei].from))].push_back(static_cast<int>(ei));

    std::vector<std::vector<int>> out;
    out.reserve(groups.size());
    for (auto& [root, ids] : groups) out.push_back(std::move(ids));
    std::sort(out.begin(), out.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
    return out;
}

int main_component(const TransitionGraph& t, const std::vector<std::vector<int>>& comps) {
    const Tuple anchor(static_cast<size_t>(t.k - 2), 1);
    const int av = t.vertex_id(anchor);
    if (av < 0) throw MissingAnchorError("all-ones vertex " + to_string(anchor) + " is not in the graph");
    for (size_t ci = 0; ci < comps.size(); ++ci)
        for (int ei : comps[ci])
            if (t.edges[ei].from == anchor || t.edges[ei].to == anchor)
                return static_cast<int>(ci);
    throw MissingAnchorError("all-ones vertex " + to_string(anchor) + " has no incident edges");
}

} // namespace ucyc
