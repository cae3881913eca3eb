#include <doctest.h>

#include <algorithm>
#include <set>

#include "ucyc/class_graph.hpp"
#include "ucyc/euler.hpp"
#include "ucyc/forms.hpp"
#include "ucyc/transition_graph.hpp"

using namespace ucyc;

TEST_CASE("build_transition: T_{8,3} is the 7-edge Eulerian graph") {
    auto t = build_transition(8, 3, Filter::GoodOnly);
    CHECK(t.edges.size() == 7);
    CHECK(t.vertices.size() == 3); // (1), (2), (3)
    CHECK(degree_report(t).is_even);
    auto comps = components(t);
    REQUIRE(comps.size() == 1);
    auto circ = eulerian_circuit(t, comps[0]);
    CHECK(circ.edge_ids.size() == 7);
}

TEST_CASE("build_transition: (5,2) collapses to one vertex with two loops") {
    auto t = build_transition(5, 2, Filter::GoodOnly);
    REQUIRE(t.vertices.size() == 1);
    CHECK(t.vertices[0].empty());
    REQUIRE(t.edges.size() == 2);
    CHECK(t.edges[0].rep.entries == Tuple{1});
    CHECK(t.edges[1].rep.entries == Tuple{2});
}

TEST_CASE("k=2 circuit length is ceil(n/2)-1 good forms") {
    for (int n = 5; n <= 12; ++n) {
        auto t = build_transition(n, 2, Filter::GoodOnly);
        CHECK(static_cast<int>(t.edges.size()) == (n + 1) / 2 - 1);
        auto comps = components(t);
        REQUIRE(comps.size() == 1);
        CHECK(eulerian_circuit(t, comps[0]).edge_ids.size() == t.edges.size());
    }
}

TEST_CASE("good T_{10,4}: even, with the [3,3,3;1] loop isolated at (3,3)") {
    auto t = build_transition(10, 4, Filter::GoodOnly);
    CHECK(t.edges.size() == 18);
    CHECK(degree_report(t).is_even);
    auto comps = components(t);
    REQUIRE(comps.size() == 2);

    const ClassSig non_awesome({{1, 1}, {3, 3}});
    int iso = -1;
    for (size_t ci = 0; ci < comps.size(); ++ci)
        if (comps[ci].size() == 1) iso = static_cast<int>(ci);
    REQUIRE(iso >= 0);
    const TransitionEdge& e = t.edges[comps[iso][0]];
    CHECK(e.cls == non_awesome);
    CHECK(e.from == Tuple{3, 3});
    CHECK(e.to == Tuple{3, 3});

    // full graph is even but disconnected, so the circuit must refuse it
    std::vector<int> all_ids(t.edges.size());
    for (size_t i = 0; i < all_ids.size(); ++i) all_ids[i] = static_cast<int>(i);
    CHECK_THROWS_AS(eulerian_circuit(t, all_ids), NotEulerianError);
}

TEST_CASE("awesome T_{10,4} drops the isolated class and connects") {
    auto t = build_transition(10, 4, Filter::AwesomeOnly);
    CHECK(t.edges.size() == 17);
    auto comps = components(t);
    REQUIRE(comps.size() == 1);
    CHECK(main_component(t, comps) == 0);
    CHECK(eulerian_circuit(t, comps[0]).edge_ids.size() == 17);
}

TEST_CASE("per-class subgraphs are balanced at every vertex") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{10, 4}, {11, 4}, {12, 4}, {11, 5}}) {
        auto t = build_transition(n, k, Filter::GoodOnly);
        std::set<ClassSig> classes;
        for (const auto& e : t.edges) classes.insert(e.cls);
        for (const ClassSig& c : classes) {
            std::map<Tuple, int> bal;
            for (const auto& e : t.edges) {
                if (e.cls != c) continue;
                ++bal[e.from];
                --bal[e.to];
            }
            for (const auto& [v, b] : bal) CHECK(b == 0);
        }
    }
}

TEST_CASE("edge count equals the number of good forms") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{9, 3}, {10, 4}, {12, 4}, {11, 5}}) {
        auto t = build_transition(n, k, Filter::GoodOnly);
        long long good_forms = 0;
        std::set<Form> seen;
        for (const Form& f : all_forms(n, k))
            if (!unique_values(f).empty()) {
                ++good_forms;
                seen.insert(f);
            }
        CHECK(static_cast<long long>(t.edges.size()) == good_forms);
        // no two edges carry the same canonical form
        std::set<Form> edge_forms;
        for (const auto& e : t.edges) CHECK(edge_forms.insert(e.form).second);
        CHECK(edge_forms == seen);
    }
}

TEST_CASE("every edge runs from its rep prefix to its rep suffix") {
    auto t = build_transition(11, 4, Filter::AwesomeOnly);
    for (const auto& e : t.edges) {
        CHECK(e.from == e.rep.prefix());
        CHECK(e.to == e.rep.suffix());
        CHECK(e.rep.reattach(11) == e.form);
    }
}

TEST_CASE("rep choice overrides: per-class, validated") {
    const ClassSig cls({{1, 2}, {2, 1}, {4, 1}}); // singletons 2 and 4
    RepChoice rc{{cls, 2}};
    auto t = build_transition(8, 4, Filter::AwesomeOnly, rc);
    for (const auto& e : t.edges)
        if (e.cls == cls) CHECK(e.rep.dropped == 2);

    RepChoice badrc{{cls, 1}}; // 1 has multiplicity 2
    CHECK_THROWS_AS(build_transition(8, 4, Filter::AwesomeOnly, badrc), InvalidRepChoiceError);
}

TEST_CASE("awesome main components are even and Eulerian at the pinned sizes") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{8, 3}, {8, 4}, {10, 4}, {12, 4}, {11, 5}}) {
        auto t = build_transition(n, k, Filter::AwesomeOnly);
        auto comps = components(t);
        const int mc = main_component(t, comps);
        auto circ = eulerian_circuit(t, comps[mc]);
        CHECK(circ.edge_ids.size() == comps[mc].size());
        // consecutive circuit edges chain suffix -> prefix
        for (size_t i = 0; i < circ.edge_ids.size(); ++i) {
            const auto& cur = t.edges[circ.edge_ids[i]];
            const auto& nxt = t.edges[circ.edge_ids[(i + 1) % circ.edge_ids.size()]];
            CHECK(cur.to == nxt.from);
        }
        // each component edge exactly once
        std::set<int> uniq(circ.edge_ids.begin(), circ.edge_ids.end());
        CHECK(uniq.size() == circ.edge_ids.size());
    }
}

TEST_CASE("class graph H_{10,4}: displayed adjacency and connectivity") {
    auto h = build_class_graph(10, 4, Filter::GoodOnly);
    const ClassSig a({{1, 1}, {2, 2}, {5, 1}});
    const ClassSig b({{1, 2}, {2, 1}, {6, 1}});
    int ia = -1, ib = -1;
    for (size_t i = 0; i < h.vertices.size(); ++i) {
        if (h.vertices[i] == a) ia = static_cast<int>(i);
        if (h.vertices[i] == b) ib = static_cast<int>(i);
    }
    REQUIRE(ia >= 0);
    REQUIRE(ib >= 0);
    const auto want = std::make_pair(std::min(ia, ib), std::max(ia, ib));
    CHECK(std::find(h.edges.begin(), h.edges.end(), want) != h.edges.end());

    auto cc = class_connectivity(h);
    CHECK(cc.awesome_with_target);
}

TEST_CASE("adjacent classes share k-2 entries and equal sums") {
    auto h = build_class_graph(12, 4, Filter::GoodOnly);
    for (auto [x, y] : h.edges) {
        const Tuple fa = h.vertices[x].values_flat();
        const Tuple fb = h.vertices[y].values_flat();
        Tuple inter;
        std::set_intersection(fa.begin(), fa.end(), fb.begin(), fb.end(), std::back_inserter(inter));
        CHECK(static_cast<int>(inter.size()) == 2); // k - 2
        CHECK(h.vertices[x].total() == h.vertices[y].total());
    }
}

TEST_CASE("successful kappa steps are class-graph edges") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{10, 4}, {13, 5}}) {
        auto h = build_class_graph(n, k, Filter::GoodOnly);
        auto idx = [&](const ClassSig& c) {
            for (size_t i = 0; i < h.vertices.size(); ++i)
                if (h.vertices[i] == c) return static_cast<int>(i);
            return -1;
        };
        for (const ClassSig& c : h.vertices) {
            if (!status_of(c).is_awesome) continue;
            auto kp = kappa_path(c, n);
            REQUIRE(kp.reached_target);
            for (size_t i = 0; i + 1 < kp.path.size(); ++i) {
                const int x = idx(kp.path[i]);
                const int y = idx(kp.path[i + 1]);
                REQUIRE(x >= 0);
                REQUIRE(y >= 0);
                const auto e = std::make_pair(std::min(x, y), std::max(x, y));
                CHECK(std::find(h.edges.begin(), h.edges.end(), e) != h.edges.end());
            }
        }
    }
}

TEST_CASE("shared-vertex probe holds across awesome H edges at small sizes") {
    // reported, not guaranteed; pinned here as an observed baseline
    auto h = build_class_graph(10, 4, Filter::AwesomeOnly);
    auto rpt = shared_vertex_report(h);
    CHECK(rpt.edges_checked == static_cast<long long>(h.edges.size()));
    CHECK(rpt.edges_sharing + static_cast<long long>(rpt.non_sharing.size()) == rpt.edges_checked);
}
