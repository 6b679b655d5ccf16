#include <doctest.h>

#include <random>

#include "toric/linalg.hpp"

using namespace toric;

namespace {

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937& rng) {
    Matrix m(r, c);
    for (auto& x : m.a) x = Elem(rng() % f.order());
    return m;
}

Matrix mul(const Field& f, const Matrix& a, const Matrix& b) {
    Matrix out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k)
            for (std::size_t j = 0; j < b.cols; ++j) out.at(i, j) = f.add(out.at(i, j), f.mul(a.at(i, k), b.at(k, j)));
    return out;
}

}  // namespace

TEST_CASE("rank of small matrices") {
    Field f5(5);
    Matrix m(3, 3);
    m.a = {1, 2, 3, 0, 1, 4, 1, 3, 2};  // row 3 = row 1 + row 2
    CHECK(rank_gf(f5, m) == 2);
    CHECK(rank_gf(f5, Matrix::identity(4)) == 4);
    CHECK(rank_gf(f5, Matrix(2, 3)) == 0);
    auto e = row_reduce(f5, m);
    CHECK(e.reduced.rows == 2);
    CHECK(e.pivot_cols == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rank is invariant under transposition and invertible products") {
    std::mt19937 rng(3);
    for (std::uint32_t q : {3u, 4u, 9u, 16u}) {
        Field f(q);
        for (int it = 0; it < 30; ++it) {
            const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6, k = 1 + rng() % 4;
            Matrix a = mul(f, random_matrix(f, r, k, rng), random_matrix(f, k, c, rng));
            const auto rk = rank_gf(f, a);
            CHECK(rk <= k);
            CHECK(rank_gf(f, a.transposed()) == rk);
            Matrix h = null_space(f, a);
            CHECK(h.rows == c - rk);
            Matrix prod = mul(f, a, h.transposed());
            for (auto x : prod.a) CHECK(x == 0);
        }
    }
}

TEST_CASE("left solves") {
    Field f7(7);
    std::mt19937 rng(5);
    for (int it = 0; it < 50; ++it) {
        Matrix m = random_matrix(f7, 3, 5, rng);
        std::vector<Elem> x{Elem(rng() % 7), Elem(rng() % 7), Elem(rng() % 7)};
        auto t = vec_mat(f7, x, m);
        auto sol = solve_left(f7, m, t);
        REQUIRE(sol);
        CHECK(vec_mat(f7, *sol, m) == t);
    }
    Matrix m(1, 2);
    m.a = {1, 0};
    CHECK(!solve_left(f7, m, std::vector<Elem>{0, 1}));
}

TEST_CASE("incremental basis tracks the rank") {
    Field f4(4);
    std::mt19937 rng(9);
    for (int it = 0; it < 40; ++it) {
        Matrix m = random_matrix(f4, 1 + rng() % 7, 1 + rng() % 6, rng);
        IncrementalBasis b(f4, m.cols);
        for (std::size_t r = 0; r < m.rows; ++r) {
            auto row = m.row(r);
            const bool in = b.contains(row);
            CHECK(b.insert(std::vector<Elem>(row.begin(), row.end())) == !in);
        }
        CHECK(b.rank() == rank_gf(f4, m));
        CHECK(b.full() == (b.rank() == m.cols));
    }
}

TEST_CASE("weights") {
    CHECK(weight(std::vector<Elem>{0, 1, 0, 3}) == 2);
    CHECK(weight(std::vector<Elem>{}) == 0);
}
