#include "ucyc/class_graph.hpp"

#include <algorithm>
#include <set>

#include "ucyc/forms.hpp"

namespace ucyc {

namespace {

// multiset intersection size of two flat ascending value lists
int shared_entries(const Tuple& a, const Tuple& b) {
    int i = 0, j = 0, cnt = 0;
    while (i < static_cast<int>(a.size()) && j < static_cast<int>(b.size())) {
        if (a[i] == b[j]) {
            ++cnt;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return cnt;
}

} // namespace

ClassGraph build_class_graph(int n, int k, Filter filter) {
    ClassGraph h;
    h.n = n;
    h.k = k;
    h.filter = filter;
    h.vertices = list_classes(n, k, filter).classes;

    std::vector<Tuple> flat;
    flat.reserve(h.vertices.size());
    for (const ClassSig& c : h.vertices) flat.push_back(c.values_flat());

    const int nv = static_cast<int>(h.vertices.size());
    for (int a = 0; a < nv; ++a)
        for (int b = a + 1; b < nv; ++b)
            if (shared_entries(flat[a], flat[b]) >= k - 2) h.edges.emplace_back(a, b);
    return h;
}

ClassConnectivity class_connectivity(const ClassGraph& h) {
    const int nv = static_cast<int>(h.vertices.size());
    std::vector<int> parent(nv);
    for (int i = 0; i < nv; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : h.edges) parent[find(a)] = find(b);

    ClassConnectivity cc;
    cc.component_of.assign(nv, -1);
    std::vector<int> root_to_comp;
    for (int v = 0; v < nv; ++v) {
        const int r = find(v);
        int idx = -1;
        for (size_t i = 0; i < root_to_comp.size(); ++i)
            if (root_to_comp[i] == r) idx = static_cast<int>(i);
        if (idx < 0) {
            idx = static_cast<int>(root_to_comp.size());
            root_to_comp.push_back(r);
        }
        cc.component_of[v] = idx;
    }
    cc.component_count = static_cast<int>(root_to_comp.size());

    const ClassSig target = all_ones_class(h.n, h.k);
    int target_comp = -1;
    for (int v = 0; v < nv; ++v)
        if (h.vertices[v] == target) target_comp = cc.component_of[v];
    cc.awesome_with_target = target_comp >= 0;
    for (int v = 0; v < nv; ++v)
        if (status_of(h.vertices[v]).is_awesome && cc.component_of[v] != target_comp)
            cc.awesome_with_target = false;
    return cc;
}

SharedVertexReport shared_vertex_report(const ClassGraph& h, const RepChoice& overrides) {
    // vertex set of each class's transition subgraph under the chosen drops
    std::vector<std::set<Tuple>> tverts(h.vertices.size());
    for (size_t v = 0; v < h.vertices.size(); ++v) {
        const ClassSig& c = h.vertices[v];
        const Tuple singles = c.singleton_values();
        if (singles.empty()) continue; // bad classes have no representations
        int drop = singles.back();
        if (auto it = overrides.find(c); it != overrides.end()) drop = it->second;
        for (const Form& f : forms_of_class(c)) {
            const FormRep rep = choose_rep(f, drop);
            tverts[v].insert(rep.prefix());
            tverts[v].insert(rep.suffix());
        }
    }
    SharedVertexReport rpt;
    for (auto [a, b] : h.edges) {
        ++rpt.edges_checked;
        bool shares = false;
        for (const Tuple& t : tverts[a])
            if (tverts[b].count(t)) {
                shares = true;
                break;
            }
        if (shares)
            ++rpt.edges_sharing;
        else
            rpt.non_sharing.emplace_back(a, b);
    }
    return rpt;
}

} // namespace ucyc
