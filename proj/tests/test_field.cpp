#include <doctest.h>

#include <random>
#include <set>

#include "toric/field.hpp"

using namespace toric;

namespace {

Errc code_of(auto fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return Errc::invalid_argument;
}

}  // namespace

TEST_CASE("field construction and errors") {
    Field f5(5);
    CHECK(f5.order() == 5);
    CHECK(f5.characteristic() == 5);
    CHECK(f5.degree() == 1);
    CHECK(f5.add(3, 4) == 2);
    CHECK(f5.mul(3, 4) == 2);

    Field f4(4);
    CHECK(f4.characteristic() == 2);
    CHECK(f4.degree() == 2);
    CHECK(f4.modulus() == std::vector<std::uint32_t>{1, 1, 1});

    CHECK(code_of([] { Field f(6); }) == Errc::not_prime_power);
    CHECK(code_of([] { Field f(12); }) == Errc::not_prime_power);
    CHECK(code_of([] { Field f(2); }) == Errc::field_too_small);
    CHECK(code_of([] { Field f(1); }) == Errc::not_prime_power);
}

TEST_CASE("prime power decomposition") {
    CHECK(prime_power_decomposition(9) == std::pair<std::uint32_t, std::uint32_t>{3, 2});
    CHECK(prime_power_decomposition(32) == std::pair<std::uint32_t, std::uint32_t>{2, 5});
    CHECK(prime_power_decomposition(49) == std::pair<std::uint32_t, std::uint32_t>{7, 2});
    CHECK_THROWS_AS(prime_power_decomposition(10), Error);
}

TEST_CASE("primitive elements") {
    CHECK(Field(5).primitive() == 2);
    CHECK(Field(3).primitive() == 2);
    // GF(4): x has code 2 and x * x = x + 1 (code 3).
    Field f4(4);
    CHECK(f4.primitive() == 2);
    CHECK(f4.mul(2, 2) == 3);
    CHECK(f4.multiplicative_order(2) == 3);

    // Smallest element of order q - 1, checked by exhaustive order computation.
    for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 25u, 27u, 49u}) {
        Field f(q);
        auto order = [&](Elem a) {
            Elem x = a;
            std::uint32_t k = 1;
            while (x != 1) {
                x = f.mul(x, a);
                ++k;
            }
            return k;
        };
        Elem best = 0;
        for (std::uint32_t a = 1; a < q; ++a)
            if (order(Elem(a)) == q - 1 && (best == 0 || f.precedes(Elem(a), best))) best = Elem(a);
        CHECK(f.primitive() == best);
    }
}

TEST_CASE("inverse and division by zero") {
    Field f5(5);
    CHECK(f5.inv(3) == 2);
    CHECK(code_of([&] { (void)f5.inv(0); }) == Errc::division_by_zero);
    FieldElement a(f5, 3), b(Field(7), 3);
    CHECK(code_of([&] { (void)(a + b); }) == Errc::field_mismatch);
    CHECK(code_of([&] { (void)(a / FieldElement(f5, 0)); }) == Errc::division_by_zero);
}

TEST_CASE("powers of the primitive element enumerate the multiplicative group") {
    for (std::uint32_t q : {3u, 4u, 5u, 8u, 9u, 16u, 27u, 81u, 121u, 256u}) {
        Field f(q);
        std::set<Elem> seen;
        for (std::uint32_t i = 1; i <= q - 1; ++i) seen.insert(f.exp(i));
        CHECK(seen.size() == q - 1);
        CHECK(!seen.count(0));
        for (std::uint32_t a = 1; a < q; ++a) {
            CHECK(f.pow(Elem(a), q - 1) == 1);
            CHECK(f.exp(f.log(Elem(a))) == a);
        }
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(7);
    for (std::uint32_t q : {3u, 4u, 7u, 8u, 9u, 25u, 27u, 32u, 125u, 343u, 1024u, 2187u}) {
        Field f(q);
        std::uniform_int_distribution<std::uint32_t> pick(0, q - 1);
        for (int it = 0; it < 300; ++it) {
            Elem a = Elem(pick(rng)), b = Elem(pick(rng)), c = Elem(pick(rng));
            CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.add(a, f.neg(a)) == 0);
            CHECK(f.sub(f.add(a, b), b) == a);
            if (a != 0) {
                CHECK(f.mul(a, f.inv(a)) == 1);
                CHECK(f.pow(a, -3) == f.inv(f.mul(a, f.mul(a, a))));
            }
        }
    }
}

TEST_CASE("polynomial residues and ordering") {
    Field f9(9);
    for (std::uint32_t a = 0; a < 9; ++a) {
        auto co = f9.coefficients(Elem(a));
        CHECK(co.size() == 2);
        CHECK(co[0] < 3);
        CHECK(co[1] < 3);
        CHECK(f9.from_coefficients(co) == a);
    }
    // x^2 + 1 is the smallest monic irreducible quadratic over GF(3).
    CHECK(f9.modulus() == std::vector<std::uint32_t>{1, 0, 1});
    // GF(8): (1,0,1,1) precedes (1,1,0,1), so x^3 + x^2 + 1.
    CHECK(Field(8).modulus() == std::vector<std::uint32_t>{1, 0, 1, 1});
    CHECK(f9.precedes(3, 1));  // x = (0,1) precedes 1 = (1,0)
    CHECK(f9.to_string(0) == "0");
    CHECK_THROWS_AS(f9.element(9), Error);
}

TEST_CASE("fields are reproducible") {
    Field a(27), b(27);
    CHECK(a.modulus() == b.modulus());
    CHECK(a.primitive() == b.primitive());
    for (std::uint32_t x = 0; x < 27; ++x)
        for (std::uint32_t y = 0; y < 27; ++y) CHECK(a.mul(Elem(x), Elem(y)) == b.mul(Elem(x), Elem(y)));
}

TEST_CASE("vector helpers") {
    Field f5(5);
    std::vector<Elem> v{1, 2, 3}, w{4, 4, 4};
    f5.axpy(v, w, 2);
    CHECK(v == std::vector<Elem>{4, 0, 1});
    f5.scale(v, 3);
    CHECK(v == std::vector<Elem>{2, 0, 3});
}
