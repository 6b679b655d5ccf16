#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toric/clutter.hpp"
#include "toric/distance.hpp"
#include "toric/hilbert.hpp"
#include "toric/points.hpp"
#include "toric/theory.hpp"

namespace toric {

/// Image of a degree-d evaluation map.
///
/// The generator rows are the evaluation vectors of the first monomials (in
/// graded-lex order) that are linearly independent on the points, so the
/// basis is deterministic. basis[i] is the monomial behind row i.
struct EvalCode {
    Field field;
    std::uint32_t degree = 0;
    PointKind kind = PointKind::affine;
    std::size_t length = 0;
    std::size_t dimension = 0;
    Matrix generator;
    std::vector<Monomial> basis;
    /// The evaluation points form a group, so the code has a transitive
    /// group of monomial automorphisms.
    bool transitive = false;
};

/// Polynomials of degree <= d evaluated at the points of X*.
EvalCode affine_code(const PointSet& xstar, std::uint32_t d);
/// Forms of degree d evaluated at the canonical representatives of X.
EvalCode projective_code(const PointSet& x, std::uint32_t d);
/// Forms f of degree d in s+1 variables, f(Q,1) / Q_1^d at each point of Y.
/// Throws Errc::zero_coordinate if some Q_1 is 0.
EvalCode closure_code(const PointSet& y, std::uint32_t d);

DistanceResult minimum_distance(const EvalCode& code, std::uint64_t budget = kDefaultDistanceBudget);

/// [length, dimension, distance] with the distance bracket; lo == hi == d
/// when exact.
struct CodeParameters {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::uint64_t d = 0;
    bool exact = false;
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    friend bool operator==(const CodeParameters&, const CodeParameters&) = default;
};

CodeParameters code_parameters(const EvalCode& code, const DistanceResult& r);

/// Minimum distance of the degree-d code on the projective torus of
/// P^{n-1} over GF(q). Throws Errc::invalid_degree for d < 1 and
/// Errc::invalid_argument for n < 1 or q < 3. n = 1 (a single point) gives 1.
std::uint64_t torus_distance(std::uint32_t n, std::uint32_t q, std::uint32_t d);

/// delta_X(d) in [td(|V1|) td(|V2|), td(|V1| + |V2| - 1)]. Throws
/// Errc::not_connected_bipartite.
Prediction distance_bounds_bipartite(const Clutter& g, std::uint32_t q, std::uint32_t d);

bool singleton_check(const EvalCode& code, std::uint64_t delta) noexcept;

struct DeltaYCheck {
    std::uint64_t delta_x = 0;
    std::uint64_t delta_y = 0;
    bool unit_transversal = false;
    bool equality_applies = false;  // d = 1 on a connected bipartite graph, n >= 3
    bool inequality = false;        // delta_y <= (q-1) delta_x
    bool equality = false;          // delta_y == (q-1) delta_x

    /// The claims whose hypotheses hold are all true.
    bool holds() const noexcept {
        return (!unit_transversal || inequality) && (!equality_applies || equality);
    }
};

/// Computes delta_X(d) and delta_Y(d) exactly. Throws Errc::budget_exceeded
/// if either search cannot finish within the budget.
DeltaYCheck delta_y_relation_check(const Clutter& c, const Field& f, std::uint32_t d,
                                   std::uint64_t budget = kDefaultDistanceBudget);

struct BridgeCheck {
    CodeParameters affine;
    CodeParameters closure;
    std::uint64_t hilbert_y = 0;      // H_Y(d)
    std::uint64_t hilbert_xstar = 0;  // affine H_{X*}(d)

    bool holds() const noexcept {
        return affine == closure && affine.exact && affine.k == hilbert_y && hilbert_y == hilbert_xstar;
    }
};

/// Builds C_{X*}(d) and C_Y(d) and compares their parameters and Hilbert
/// values. Throws Errc::budget_exceeded when a distance is not exact.
BridgeCheck bridge_check(const Clutter& c, const Field& f, std::uint32_t d,
                         std::uint64_t budget = kDefaultDistanceBudget);

}  // namespace toric
