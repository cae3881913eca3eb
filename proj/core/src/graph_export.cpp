#include "ucyc/graph_export.hpp"

#include <sstream>

namespace ucyc {

namespace {

std::vector<int> vertex_component_map(const TransitionGraph& t, const std::vector<std::vector<int>>& comps) {
    std::vector<int> comp_of(t.vertices.size(), -1);
    for (size_t ci = 0; ci < comps.size(); ++ci)
        for (int ei : comps[ci]) {
            comp_of[t.vertex_id(t.edges[ei].from)] = static_cast<int>(ci);
            comp_of[t.vertex_id(t.edges[ei].to)] = static_cast<int>(ci);
        }
    return comp_of;
}

nlohmann::json class_json(const ClassSig& c) {
    nlohmann::json j = nlohmann::json::array();
    for (auto [v, m] : c.items) j.push_back({v, m});
    return j;
}

} // namespace

std::string to_dot(const TransitionGraph& t) {
    const auto comps = components(t);
    const auto comp_of = vertex_component_map(t, comps);
    std::ostringstream os;
    os << "digraph transition {\n";
    os << "  label=\"T_{" << t.n << "," << t.k << "} filter=" << to_string(t.filter) << "\";\n";
    for (size_t v = 0; v < t.vertices.size(); ++v)
        os << "  \"" << to_string(t.vertices[v]) << "\" [comp=" << comp_of[v] << "];\n";
    std::vector<int> edge_comp(t.edges.size(), -1);
    for (size_t ci = 0; ci < comps.size(); ++ci)
        for (int ei : comps[ci]) edge_comp[ei] = static_cast<int>(ci);
    for (size_t ei = 0; ei < t.edges.size(); ++ei) {
        const TransitionEdge& e = t.edges[ei];
        os << "  \"" << to_string(e.from) << "\" -> \"" << to_string(e.to) << "\" [label=\"" << to_string(e.rep)
           << " " << to_string(e.cls) << "\", comp=" << edge_comp[ei] << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string to_dot(const ClassGraph& h) {
    const auto cc = class_connectivity(h);
    std::ostringstream os;
    os << "graph classes {\n";
    os << "  label=\"H_{" << h.n << "," << h.k << "} filter=" << to_string(h.filter) << "\";\n";
    for (size_t v = 0; v < h.vertices.size(); ++v) {
        const ClassStatus st = status_of(h.vertices[v]);
        os << "  \"" << to_string(h.vertices[v]) << "\" [comp=" << cc.component_of[v]
           << (st.is_awesome ? ", awesome=1" : "") << "];\n";
    }
    for (auto [a, b] : h.edges)
        os << "  \"" << to_string(h.vertices[a]) << "\" -- \"" << to_string(h.vertices[b]) << "\";\n";
    os << "}\n";
    return os.str();
}

nlohmann::json to_json(const TransitionGraph& t) {
    const auto comps = components(t);
    std::vector<int> edge_comp(t.edges.size(), -1);
    for (size_t ci = 0; ci < comps.size(); ++ci)
        for (int ei : comps[ci]) edge_comp[ei] = static_cast<int>(ci);

    nlohmann::json j;
    j["n"] = t.n;
    j["k"] = t.k;
    j["which"] = "transition";
    j["filter"] = to_string(t.filter);
    j["vertices"] = t.vertices;
    nlohmann::json edges = nlohmann::json::array();
    for (size_t ei = 0; ei < t.edges.size(); ++ei) {
        const TransitionEdge& e = t.edges[ei];
        edges.push_back({{"from", e.from},
                         {"to", e.to},
                         {"rep", e.rep.entries},
                         {"dropped", e.rep.dropped},
                         {"class", class_json(e.cls)},
                         {"component", edge_comp[ei]}});
    }
    j["edges"] = std::move(edges);
    j["component_count"] = comps.size();
    return j;
}

nlohmann::json to_json(const ClassGraph& h) {
    const auto cc = class_connectivity(h);
    nlohmann::json j;
    j["n"] = h.n;
    j["k"] = h.k;
    j["which"] = "class";
    j["filter"] = to_string(h.filter);
    nlohmann::json verts = nlohmann::json::array();
    for (size_t v = 0; v < h.vertices.size(); ++v) {
        const ClassStatus st = status_of(h.vertices[v]);
        verts.push_back({{"class", class_json(h.vertices[v])},
                         {"label", to_string(h.vertices[v])},
                         {"good", st.is_good},
                         {"awesome", st.is_awesome},
                         {"component", cc.component_of[v]}});
    }
    j["vertices"] = std::move(verts);
    nlohmann::json edges = nlohmann::json::array();
    for (auto [a, b] : h.edges) edges.push_back({{"a", a}, {"b", b}});
    j["edges"] = std::move(edges);
    j["component_count"] = cc.component_count;
    j["awesome_with_target"] = cc.awesome_with_target;
    return j;
}

} // namespace ucyc
