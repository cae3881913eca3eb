#include "ucyc/euler.hpp"

#include <algorithm>
#include <set>

namespace ucyc {

EulerCircuit eulerian_circuit(const TransitionGraph& t, const std::vector<int>& component_edges) {
    if (component_edges.empty()) throw NotEulerianError("empty component");

    const std::set<int> in_comp(component_edges.begin(), component_edges.end());

    // component-restricted adjacency; edge ids are already sorted per vertex
    std::vector<std::vector<int>> out(t.vertices.size());
    std::vector<int> indeg(t.vertices.size(), 0);
    std::set<int> comp_verts;
    for (int ei : component_edges) {
        const int u = t.vertex_id(t.edges[ei].from);
        const int v = t.vertex_id(t.edges[ei].to);
        out[u].push_back(ei);
        ++indeg[v];
        comp_verts.insert(u);
        comp_verts.insert(v);
    }
    for (int v : comp_verts) {
        if (indeg[v] != static_cast<int>(out[v].size()))
            throw NotEulerianError("vertex " + to_string(t.vertices[v]) + ": in=" + std::to_string(indeg[v]) +
                                   " out=" + std::to_string(out[v].size()));
    }

    // start at the all-ones anchor when it lies in this component
    int start = *comp_verts.begin();
    const Tuple anchor(static_cast<size_t>(t.k - 2), 1);
    const int av = t.vertex_id(anchor);
    if (av >= 0 && comp_verts.count(av)) start = av;

    // Hierholzer with an explicit stack; next[v] walks out[v] once in total
    std::vector<size_t> next(t.vertices.size(), 0);
    std::vector<std::pair<int, int>> stack; // (vertex, incoming edge id or -1)
    std::vector<int> circuit;
    circuit.reserve(component_edges.size());
    stack.emplace_back(start, -1);
    while (!stack.empty()) {
        auto [v, inc] = stack.back();
        if (next[v] < out[v].size()) {
            const int ei = out[v][next[v]++];
            stack.emplace_back(t.vertex_id(t.edges[ei].to), ei);
        } else {
            stack.pop_back();
            if (inc >= 0) circuit.push_back(inc);
        }
    }
    std::reverse(circuit.begin(), circuit.end());

    if (circuit.size() != component_edges.size())
        throw NotEulerianError("component not reachable from " + to_string(t.vertices[start]) + ": traversed " +
                               std::to_string(circuit.size()) + " of " + std::to_string(component_edges.size()) +
                               " edges");
    return EulerCircuit{std::move(circuit)};
}

} // namespace ucyc
