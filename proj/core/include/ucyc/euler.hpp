#pragma once

#include <vector>

#include "ucyc/transition_graph.hpp"

namespace ucyc {

/// Edge ids in traversal order; consecutive edges share suffix -> prefix, and
/// the walk closes back to its starting vertex.
struct EulerCircuit {
    std::vector<int> edge_ids;
};

/// Hierholzer edge splicing over one component. Requires in-degree equal to
/// out-degree at every vertex of the component and all component edges
/// reachable from the start; throws NotEulerianError with the offending vertex
/// or a disconnection witness. Deterministic: edges leave each vertex in
/// sorted order.
EulerCircuit eulerian_circuit(const TransitionGraph& t, const std::vector<int>& component_edges);

} // namespace ucyc
