#pragma once

#include <map>
#include <vector>

#include "ucyc/classes.hpp"
#include "ucyc/types.hpp"

namespace ucyc {

/// Per-class dropped-value assignment; classes not present use their largest
/// singleton.
using RepChoice = std::map<ClassSig, int>;

struct TransitionEdge {
    Tuple from, to; // prefix and suffix of rep
    FormRep rep;
    Form form;
    ClassSig cls;
};

/// Directed multigraph on (k-2)-tuples whose edges are form representations.
/// Vertices and edges are sorted, so traversal order is deterministic.
struct TransitionGraph {
    int n = 0, k = 0;
    Filter filter = Filter::AwesomeOnly;
    std::vector<Tuple> vertices;              // sorted
    std::vector<TransitionEdge> edges;        // sorted by (from, to, rep)
    std::vector<std::vector<int>> out_edges;  // vertex id -> edge ids
    std::vector<std::vector<int>> in_edges;
    RepChoice rep_choice;                     // effective per-class choice

    int vertex_id(const Tuple& v) const;      // -1 when absent
};

/// One edge per form of each class passing the filter, each edge running from
/// the rep's prefix to its suffix. Overrides must name singleton values of
/// their classes (InvalidRepChoiceError otherwise).
TransitionGraph build_transition(int n, int k, Filter filter, const RepChoice& overrides = {});

/// Same, reusing an already enumerated class list.
TransitionGraph build_transition(const ClassList& cl, const RepChoice& overrides = {});

struct DegreeReport {
    std::vector<std::pair<int, int>> in_out; // per vertex id
    bool is_even = false;                    // in == out everywhere
};

DegreeReport degree_report(const TransitionGraph& t);

/// Weakly connected components as a partition of edge ids, each component's
/// edge list sorted, components ordered by smallest edge id.
std::vector<std::vector<int>> components(const TransitionGraph& t);

/// Index of the component containing the all-ones (k-2)-tuple.
/// Throws MissingAnchorError when that vertex is absent.
int main_component(const TransitionGraph& t, const std::vector<std::vector<int>>& comps);

} // namespace ucyc
