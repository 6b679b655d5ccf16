#include <doctest.h>

#include <random>

#include "support/graphs.hpp"
#include "support/oracles.hpp"
#include "toric/codes.hpp"

using namespace toric;

namespace {

Clutter triangle() { return Clutter::from_one_based(3, {{1, 2}, {2, 3}, {1, 3}}); }

std::uint64_t exact_distance(const EvalCode& c) {
    auto r = minimum_distance(c, 20'000'000'000ull);
    REQUIRE(r.exact);
    return r.distance;
}

}  // namespace

TEST_CASE("degree zero codes are repetition codes") {
    Field f4(4);
    auto xs = affine_toric_set(support::cycle_graph(4), f4);
    auto c = affine_code(xs, 0);
    CHECK(c.dimension == 1);
    for (std::size_t j = 0; j < c.length; ++j) CHECK(c.generator.at(0, j) == 1);
    CHECK(exact_distance(c) == c.length);
    CHECK(singleton_check(c, c.length));
    auto y = closure_code(projective_closure_points(support::cycle_graph(4), f4), 0);
    CHECK(y.dimension == 1);
    CHECK(exact_distance(y) == y.length);
}

TEST_CASE("Reed-Solomon codes from a single variable") {
    Field f5(5);
    auto xs = affine_toric_set(Clutter(1, {{0}}), f5);
    CHECK(xs.size() == 4);
    for (std::uint32_t d = 0; d <= 3; ++d) {
        auto c = affine_code(xs, d);
        CHECK(c.dimension == d + 1);
        const auto delta = exact_distance(c);
        CHECK(delta == 4 - d);  // MDS
        CHECK(singleton_check(c, delta));
        CHECK(delta == support::oracle_min_distance(f5, c.generator));
    }
    auto full = affine_code(xs, 7);
    CHECK(full.dimension == 4);
}

TEST_CASE("C6 over GF(5)") {
    Field f5(5);
    auto x = projective_toric_set(support::cycle_graph(6), f5);
    auto c = projective_code(x, 1);
    CHECK(c.length == 256);
    CHECK(c.dimension == 6);
    CHECK(c.transitive);
    auto r = minimum_distance(c);
    CHECK(r.exact);
    CHECK(r.distance == 186);
    CHECK(weight(r.codeword) == 186);
    CHECK(vec_mat(f5, r.message, c.generator) == r.codeword);
    auto b = distance_bounds_bipartite(support::cycle_graph(6), 5, 1);
    CHECK(b.lo == 144);
    CHECK(b.hi == 192);
}

TEST_CASE("torus distance formula") {
    CHECK(torus_distance(3, 5, 1) == 12);
    for (std::uint32_t d = 6; d <= 10; ++d) CHECK(torus_distance(3, 5, d) == 1);
    CHECK(torus_distance(2, 3, 1) == 1);
    CHECK_THROWS_AS(torus_distance(3, 5, 0), Error);
    try {
        torus_distance(3, 5, 0);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::invalid_degree);
    }
}

TEST_CASE("torus distance matches search") {
    // n = 4 with q = 5 runs in the acceptance sweep
    for (std::uint32_t q : {3u, 4u, 5u, 7u})
        for (std::uint32_t n = 2; n <= 4; ++n) {
            if (q >= 5 && n == 4) continue;
            Field f(q);
            auto x = projective_toric_set(support::torus_clutter(int(n)), f);
            for (std::uint32_t d = 1; d <= (q - 2) * (n - 1) + 1; ++d) {
                auto c = projective_code(x, d);
                auto r = minimum_distance(c, 20'000'000'000ull);
                REQUIRE(r.exact);
                CHECK_MESSAGE(r.distance == torus_distance(n, q, d), "n=", n, " q=", q, " d=", d);
            }
        }
}

TEST_CASE("dimension equals the Hilbert function") {
    for (std::uint32_t q : {3u, 4u, 5u}) {
        Field f(q);
        for (const auto& c : {triangle(), support::cycle_graph(4), support::complete_bipartite(2, 3),
                              Clutter::from_one_based(5, {{1, 2, 3}, {3, 4}, {4, 5, 1}})}) {
            auto x = projective_toric_set(c, f);
            auto y = projective_closure_points(c, f);
            auto xs = affine_toric_set(c, f);
            for (std::uint32_t d = 0; d <= 4; ++d) {
                CHECK(projective_code(x, d).dimension == hilbert_function(x, d));
                CHECK(affine_code(xs, d).dimension == hilbert_function(xs, d));
                CHECK(closure_code(y, d).dimension == hilbert_function(y, d));
                CHECK(closure_code(y, d).length == y.size());
            }
        }
    }
}

TEST_CASE("closure and affine codes share their parameters") {
    Field f3(3);
    auto chk = bridge_check(support::cycle_graph(4), f3, 1);
    CHECK(chk.holds());
    for (std::uint32_t q : {3u, 4u, 5u})
        for (int n = 2; n <= (q == 3 ? 4 : 3); ++n)
            for (const auto& g : support::connected_graphs(n))
                for (std::uint32_t d = 1; d <= 3; ++d) {
                    auto b = bridge_check(g, Field(q), d);
                    CHECK(b.holds());
                    if (saturating_pow(q, b.affine.k) <= 200'000) {
                        auto code = affine_code(affine_toric_set(g, Field(q)), d);
                        CHECK(b.affine.d == support::oracle_min_distance(Field(q), code.generator));
                    }
                }
}

TEST_CASE("closure code normalization") {
    // Each entry of C_Y(d) is f(Q,1)/Q_1^d; for f = t_1^d that is the all-ones word.
    Field f5(5);
    auto y = projective_closure_points(triangle(), f5);
    auto c = closure_code(y, 2);
    REQUIRE(c.basis.front() == Monomial{2, 0, 0, 0});
    for (std::size_t j = 0; j < c.length; ++j) CHECK(c.generator.at(0, j) == 1);
    PointSet bad(f5, PointKind::closure, 2);
    bad.insert(std::vector<Elem>{0, 1});
    CHECK_THROWS_AS(closure_code(bad, 1), Error);
}

TEST_CASE("basis rows follow graded-lex order") {
    Field f3(3);
    auto c = projective_code(projective_toric_set(support::cycle_graph(4), f3), 2);
    auto all = monomials_of_degree(4, 2);
    std::size_t pos = 0;
    for (const auto& m : c.basis) {
        while (pos < all.size() && all[pos] != m) ++pos;
        CHECK(pos < all.size());
    }
}

TEST_CASE("bipartite distance bounds") {
    for (std::uint32_t q : {3u, 4u, 5u})
        for (int n = 2; n <= 5; ++n)
            for (const auto& g : support::connected_graphs(n)) {
                auto facts = graph_facts(g);
                if (!facts.bipartite()) {
                    CHECK_THROWS_AS(distance_bounds_bipartite(g, q, 1), Error);
                    continue;
                }
                auto x = projective_toric_set(g, Field(q));
                for (std::uint32_t d = 1; d <= 2; ++d) {
                    auto b = distance_bounds_bipartite(g, q, d);
                    const auto delta = exact_distance(projective_code(x, d));
                    CHECK(b.contains(delta));
                    if (*facts.tree) CHECK(delta == b.hi);
                    if (std::size_t(g.num_edges()) == facts.bipartition->first.size() * facts.bipartition->second.size())
                        CHECK(delta == b.lo);
                }
            }
}

TEST_CASE("delta_Y relation") {
    auto c4 = delta_y_relation_check(support::cycle_graph(4), Field(3), 1);
    CHECK(c4.delta_y == 2 * c4.delta_x);
    CHECK(c4.equality_applies);
    CHECK(c4.holds());
    auto path = delta_y_relation_check(support::path_graph(3), Field(4), 2);
    CHECK(path.unit_transversal);
    CHECK(path.inequality);
    CHECK(path.holds());
    auto c6 = delta_y_relation_check(support::cycle_graph(6), Field(5), 1);
    CHECK(c6.delta_x == 186);
    CHECK(c6.delta_y == 4 * 186);
    // without the hypotheses the relation is only reported
    auto tri = delta_y_relation_check(triangle(), Field(5), 1);
    CHECK(!tri.unit_transversal);
    CHECK(tri.holds());
}

TEST_CASE("distance is invariant under column scaling") {
    std::mt19937 rng(31);
    Field f4(4);
    for (const auto& g : {support::cycle_graph(4), triangle(), support::complete_bipartite(2, 3)}) {
        auto c = projective_code(projective_toric_set(g, f4), 2);
        const auto d0 = exact_distance(c);
        Matrix m = c.generator;
        for (std::size_t j = 0; j < m.cols; ++j) {
            Elem s = f4.exp(rng() % 3);
            for (std::size_t i = 0; i < m.rows; ++i) m.at(i, j) = f4.mul(m.at(i, j), s);
        }
        auto r = minimum_distance(f4, m);
        REQUIRE(r.exact);
        CHECK(r.distance == d0);
        if (saturating_pow(4, m.rows) <= 100'000) CHECK(support::oracle_min_distance(f4, m) == d0);
    }
}

TEST_CASE("distance monotonicity along spanning subgraphs") {
    Field f3(3);
    for (int n = 3; n <= 5; ++n)
        for (const auto& g : support::connected_graphs(n)) {
            auto xg = projective_toric_set(g, f3);
            for (int e = 0; e < g.num_edges(); ++e) {
                std::vector<int> keep;
                for (int i = 0; i < g.num_edges(); ++i)
                    if (i != e) keep.push_back(i);
                auto h = g.with_edges(keep);
                auto xh = projective_toric_set(h, f3);
                if (xh.size() != xg.size()) continue;
                for (std::uint32_t d = 1; d <= 2; ++d)
                    CHECK(exact_distance(projective_code(xg, d)) <= exact_distance(projective_code(xh, d)));
            }
        }
}

TEST_CASE("wrong point kinds are refused") {
    Field f3(3);
    auto x = projective_toric_set(triangle(), f3);
    CHECK_THROWS_AS(affine_code(x, 1), Error);
    CHECK_THROWS_AS(closure_code(x, 1), Error);
    CHECK_THROWS_AS(projective_code(affine_toric_set(triangle(), f3), 1), Error);
}
