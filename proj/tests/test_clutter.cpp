#include <doctest.h>

#include <random>

#include "support/graphs.hpp"
#include "toric/clutter.hpp"

using namespace toric;

namespace {

Errc code_of(auto fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::inconsistent_theorems;
}

Clutter triangle() { return Clutter::from_one_based(3, {{1, 2}, {2, 3}, {1, 3}}); }

}  // namespace

TEST_CASE("clutter validation") {
    CHECK(code_of([] { Clutter::from_one_based(3, {{1, 2}, {1, 2, 3}}); }) == Errc::clutter_axiom_violation);
    CHECK(code_of([] { Clutter::from_one_based(3, {{1, 2}, {2, 1}}); }) == Errc::clutter_axiom_violation);
    CHECK(code_of([] { Clutter::from_one_based(3, {{1, 4}}); }) == Errc::invalid_argument);
    CHECK(code_of([] { Clutter::from_one_based(3, {{1, 1}}); }) == Errc::invalid_argument);
    CHECK(code_of([] { Clutter::from_one_based(3, {{}}); }) == Errc::invalid_argument);
    CHECK(code_of([] { Clutter(3, {}); }) == Errc::invalid_argument);
    try {
        Clutter::from_one_based(4, {{1, 2}, {3, 4}, {1, 2, 4}});
        FAIL("accepted a nested pair");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("edge 1") != std::string::npos);
        CHECK(std::string(e.what()).find("edge 3") != std::string::npos);
    }
}

TEST_CASE("random families with forced nesting are rejected") {
    std::mt19937 rng(11);
    for (int it = 0; it < 200; ++it) {
        const int n = 3 + int(rng() % 6);
        std::vector<std::vector<int>> edges;
        const int s = 1 + int(rng() % 4);
        for (int i = 0; i < s; ++i) {
            std::vector<int> e;
            for (int v = 0; v < n; ++v)
                if (rng() % 2) e.push_back(v);
            if (e.empty()) e.push_back(int(rng() % std::uint32_t(n)));
            edges.push_back(e);
        }
        // Duplicate a random edge after dropping some of its vertices.
        auto sub = edges[rng() % edges.size()];
        if (sub.size() > 1) sub.resize(1 + rng() % sub.size());
        edges.insert(edges.begin() + std::ptrdiff_t(rng() % (edges.size() + 1)), sub);
        CHECK(code_of([&] { Clutter(n, edges); }) == Errc::clutter_axiom_violation);
    }
}

TEST_CASE("characteristic vectors") {
    auto v = characteristic_vectors(triangle());
    CHECK(v == std::vector<CharVec>{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK(characteristic_vectors(Clutter(2, {{0, 1}})) == std::vector<CharVec>{{1, 1}});
    CHECK(characteristic_vectors(support::path_graph(3)) == std::vector<CharVec>{{1, 1, 0}, {0, 1, 1}});
}

TEST_CASE("graph facts of small examples") {
    auto c6 = graph_facts(support::cycle_graph(6));
    CHECK(c6.is_graph);
    CHECK(*c6.connected);
    CHECK(c6.bipartite());
    CHECK(*c6.unicyclic);
    CHECK(*c6.cycle_length == 6);
    CHECK(*c6.hamiltonian);
    CHECK(*c6.largest_cycle == 6);
    CHECK(!*c6.tree);

    auto tri = graph_facts(triangle());
    CHECK(!tri.bipartite());
    CHECK(tri.unicyclic_odd());
    CHECK(*tri.cycle_length == 3);

    auto f3 = graph_facts(support::example_f3_graph());
    CHECK(*f3.connected);
    REQUIRE(f3.bipartite());
    CHECK(f3.bipartition->first == std::vector<int>{0, 2, 4, 6});
    CHECK(*f3.largest_cycle == 6);
    CHECK(!*f3.hamiltonian);

    auto star = graph_facts(Clutter(4, {{0, 1}, {0, 2}, {0, 3}}));
    CHECK(*star.tree);
    CHECK(!star.largest_cycle);
    CHECK(star.free_vertices == std::vector<int>{1, 2, 3});

    auto hyper = graph_facts(Clutter(5, {{0, 1}, {2, 3, 4}}));
    CHECK(!hyper.is_graph);
    CHECK(!hyper.connected);
    CHECK(hyper.free_vertices == std::vector<int>{0, 1, 2, 3, 4});

    auto two = graph_facts(Clutter(4, {{0, 1}, {2, 3}}));
    CHECK(!*two.connected);
    CHECK(*two.components == 2);
}

TEST_CASE("graph facts are consistent on every connected graph with at most 6 vertices") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& g : support::connected_graphs(n)) {
            auto f = graph_facts(g);
            const int s = g.num_edges();
            if (*f.tree) CHECK(s == n - 1);
            if (*f.unicyclic) CHECK(s == n);
            if (f.bipartition) {
                std::vector<int> side(std::size_t(n), -1);
                for (int v : f.bipartition->first) side[std::size_t(v)] = 0;
                for (int v : f.bipartition->second) side[std::size_t(v)] = 1;
                for (int v = 0; v < n; ++v) CHECK(side[std::size_t(v)] >= 0);
                for (const auto& e : g.edges()) CHECK(side[std::size_t(e[0])] != side[std::size_t(e[1])]);
                auto t = find_unit_transversal(g);
                REQUIRE(t);
                CHECK(*t == f.bipartition->first);
            } else {
                REQUIRE(f.largest_cycle);
                CHECK(!find_unit_transversal(g));
            }
            if (f.largest_cycle) CHECK(*f.largest_cycle <= n);
            CHECK(*f.hamiltonian == (f.largest_cycle && *f.largest_cycle == n));
        }
}

TEST_CASE("uniformity") {
    CHECK(is_k_uniform(triangle()) == 2);
    CHECK(!is_k_uniform(Clutter::from_one_based(5, {{1, 2}, {3, 4, 5}})));
}

TEST_CASE("unit transversals") {
    CHECK(!find_unit_transversal(triangle()));
    CHECK(find_unit_transversal(Clutter(2, {{0, 1}})) == std::vector<int>{0});
    auto t = find_unit_transversal(Clutter::from_one_based(6, {{1, 2, 3}, {3, 4, 5}, {5, 6, 1}}));
    REQUIRE(t);
    // every edge meets it exactly once
    for (const auto& e : std::vector<std::vector<int>>{{0, 1, 2}, {2, 3, 4}, {4, 5, 0}}) {
        int hits = 0;
        for (int v : e) hits += std::count(t->begin(), t->end(), v) > 0;
        CHECK(hits == 1);
    }
}

TEST_CASE("spanning trees") {
    auto c4 = support::cycle_graph(4);
    auto t = spanning_tree(c4);
    CHECK(t.num_edges() == 3);
    CHECK(t.edges() == std::vector<std::vector<int>>(c4.edges().begin(), c4.edges().begin() + 3));
    auto tree = support::path_graph(5);
    CHECK(spanning_tree(tree) == tree);
    CHECK(spanning_tree(support::complete_bipartite(2, 2)).num_edges() == 3);
    CHECK(code_of([] { spanning_tree(Clutter(4, {{0, 1}, {2, 3}})); }) == Errc::not_connected);
    CHECK(code_of([] { spanning_tree(Clutter(3, {{0, 1, 2}})); }) == Errc::not_a_graph);
}

TEST_CASE("clique clutters and chordality") {
    auto cl = clique_clutter(triangle());
    CHECK(cl.edges() == std::vector<std::vector<int>>{{0, 1, 2}});
    CHECK(is_chordal(triangle()));
    auto c4 = support::cycle_graph(4);
    CHECK(clique_clutter(c4).num_edges() == 4);
    CHECK(!is_chordal(c4));
    auto p3 = support::path_graph(3);
    CHECK(is_chordal(p3));
    CHECK(clique_clutter(p3).num_edges() == 2);
    CHECK(code_of([] { clique_clutter(Clutter(3, {{0, 1, 2}})); }) == Errc::not_a_graph);
}

TEST_CASE("cycle searches refuse oversized graphs") {
    auto big = support::cycle_graph(kMaxCycleSearchVertices + 1);
    CHECK(code_of([&] { graph_facts(big); }) == Errc::size_limit);
}

TEST_CASE("one-based round trip") {
    auto g = support::example_f3_graph();
    CHECK(Clutter::from_one_based(8, g.one_based_edges()) == g);
}
