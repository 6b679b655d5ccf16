#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toric/clutter.hpp"
#include "toric/field.hpp"
#include "toric/hilbert.hpp"

namespace toric {

/// A closed-form claim about one quantity: exact when lo == hi.
///
/// Quantity names: "|X|", "|Y|", "|Y|/|X|", "reg(X)", "deg(X)", "reg(Y)",
/// "ci(X)", "ci(Y)" (0/1), "delta_X(d)".
struct Prediction {
    std::string quantity;
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::string theorem;
    bool hypotheses = true;

    bool exact() const noexcept { return lo == hi; }
    bool contains(std::uint64_t v) const noexcept { return lo <= v && v <= hi; }
    friend bool operator==(const Prediction&, const Prediction&) = default;
};

Prediction exact_prediction(std::string quantity, std::uint64_t value, std::string theorem);
Prediction interval_prediction(std::string quantity, std::uint64_t lo, std::uint64_t hi, std::string theorem);
/// A prediction whose theorem does not apply to this input.
Prediction refused_prediction(std::string quantity, std::string theorem);

/// |X|, |Y| and their ratio. The universal bound 1 <= |Y|/|X| <= q-1 is
/// always present; exact values are added as the hypotheses allow.
std::vector<Prediction> predict_cardinalities(const Clutter& c, std::uint32_t q);

struct TorusInvariants {
    std::uint64_t degree = 0;
    std::uint64_t regularity = 0;
    std::vector<std::int64_t> h;  // coefficients of (1 + t + ... + t^{q-2})^{s-1}
};

/// Projective torus in P^{s-1} over GF(q).
TorusInvariants torus_invariants(std::uint32_t s, std::uint32_t q);

/// (|V1|-1)(q-2) <= reg <= (|V1|+|V2|-2)(q-2) with |V2| <= |V1|, collapsed to
/// the left end for complete bipartite graphs and to the right end for trees.
/// Throws Errc::not_connected_bipartite.
Prediction reg_bounds_bipartite(const Clutter& g, std::uint32_t q);

/// Every exact value or upper bound on reg(X) (and deg(X) where known) from
/// the structural families: Hamiltonian bipartite, unicyclic bipartite,
/// largest cycle, tree, clique clutter of a chordal graph. Inapplicable
/// families are omitted.
std::vector<Prediction> reg_exact_families(const Clutter& c, std::uint32_t q);

/// All reg(X)/deg(X) predictions for c (bounds and families) without any
/// point enumeration.
std::vector<Prediction> regularity_predictions(const Clutter& c, std::uint32_t q);

/// Intersection of every interval for one quantity. Throws
/// Errc::inconsistent_theorems if two predictions cannot both hold.
std::optional<Prediction> combine(const std::vector<Prediction>& preds, const std::string& quantity);

struct FreeVertexCheck {
    int vertex = -1;  // 0-based
    int edge = -1;    // index in the original edge list
    std::uint64_t reg_x = 0, reg_reduced = 0;
    std::uint64_t deg_x = 0, deg_reduced = 0;
    bool holds = false;
};

/// Picks the highest-index free vertex, moves its edge last, and compares
/// the profiles of X and of X' (edge dropped). Throws Errc::no_free_vertex,
/// or Errc::invalid_argument when c has a single edge.
FreeVertexCheck free_vertex_reduction_check(const Clutter& c, const Field& f);

/// reg <= deg - (s - 1).
bool eisenbud_goto_check(const HilbertProfile& profile, std::uint32_t s);
/// (q-1)^{2k-2} >= (k-1)(q+k-1), evaluated without overflow.
bool eisenbud_goto_lemma(std::uint64_t k, std::uint64_t q);

struct CiReport {
    bool ci_x = false;  // X is a projective torus
    bool ci_y = false;  // X* is an affine torus
    std::optional<bool> predicted_ci_x;
    std::optional<bool> predicted_ci_y;
    std::string theorem_x;
    std::string theorem_y;
    bool agree_x = true;
    bool agree_y = true;
    bool implication_holds = true;  // ci_y implies ci_x

    bool consistent() const noexcept { return agree_x && agree_y && implication_holds; }
};

/// Point-set tests plus, for connected graphs, the graph characterizations.
CiReport ci_report(const Clutter& c, const Field& f, std::uint64_t budget = kDefaultPointBudget);
/// Graph-side CI predictions only.
std::vector<Prediction> predict_ci(const Clutter& c, std::uint32_t q);

}  // namespace toric
