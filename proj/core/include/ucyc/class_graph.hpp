#pragma once

#include <vector>

#include "ucyc/transition_graph.hpp"
#include "ucyc/types.hpp"

namespace ucyc {

/// Undirected graph on classes, adjacent when their multisets share a common
/// sub-multiset of size k-2 (equivalently: remove two entry copies from one,
/// add two others, keeping the sum).
struct ClassGraph {
    int n = 0, k = 0;
    Filter filter = Filter::AwesomeOnly;
    std::vector<ClassSig> vertices;          // sorted
    std::vector<std::pair<int, int>> edges;  // vertex-id pairs, a < b, sorted
};

ClassGraph build_class_graph(int n, int k, Filter filter);

struct ClassConnectivity {
    std::vector<int> component_of; // per vertex id
    int component_count = 0;
    /// All awesome classes share one component with [1^{k-1}; n-k+1].
    bool awesome_with_target = false;
};

ClassConnectivity class_connectivity(const ClassGraph& h);

/// Probe: for each H-edge, do the two classes' transition subgraphs (under the
/// given rep choice) share a vertex? Reported, not asserted.
struct SharedVertexReport {
    long long edges_checked = 0;
    long long edges_sharing = 0;
    std::vector<std::pair<int, int>> non_sharing; // H-edge vertex-id pairs
};

SharedVertexReport shared_vertex_report(const ClassGraph& h, const RepChoice& overrides = {});

} // namespace ucyc
