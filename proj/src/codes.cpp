#include "toric/codes.hpp"

#include <algorithm>

namespace toric {

namespace {

// Walks the monomials in order and keeps those whose evaluation rows are
// independent of the rows kept so far. Stops once the full space is reached.
EvalCode build_code(const PointSet& pts, std::uint32_t d, const std::vector<Monomial>& monomials,
                    const std::vector<std::vector<Elem>>& reps, const std::vector<Elem>& scale) {
    const Field& f = pts.field();
    const std::size_t n = pts.size();
    if (n * std::max<std::size_t>(monomials.size(), 1) > kDefaultMatrixEntries * 10)
        throw Error(Errc::size_limit, "evaluation matrix too large");
    EvalCode code{f, d, pts.kind(), n, 0, Matrix(), {}, pts.is_group()};
    IncrementalBasis basis(f, n);
    std::vector<Elem> rows;
    for (const auto& m : monomials) {
        if (basis.full()) break;
        std::vector<Elem> row(n);
        for (std::size_t i = 0; i < n; ++i) {
            Elem v = eval_monomial(f, reps[i], m);
            row[i] = scale.empty() ? v : f.mul(v, scale[i]);
        }
        if (basis.insert(row)) {
            rows.insert(rows.end(), row.begin(), row.end());
            code.basis.push_back(m);
        }
    }
    code.dimension = code.basis.size();
    code.generator.rows = code.dimension;
    code.generator.cols = n;
    code.generator.a = std::move(rows);
    return code;
}

std::vector<std::vector<Elem>> canonical_points(const PointSet& pts) {
    std::vector<std::vector<Elem>> out;
    out.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        auto p = pts.point(i);
        out.emplace_back(p.begin(), p.end());
    }
    return out;
}

std::uint64_t checked_distance(const EvalCode& code, std::uint64_t budget) {
    auto r = minimum_distance(code, budget);
    if (!r.exact)
        throw Error(Errc::budget_exceeded, "minimum distance search did not finish within the budget (bounds " +
                                               std::to_string(r.lower) + ".." + std::to_string(r.upper) + ")");
    return r.distance;
}

}  // namespace

EvalCode affine_code(const PointSet& xstar, std::uint32_t d) {
    if (xstar.kind() != PointKind::affine) throw Error(Errc::invalid_argument, "affine_code needs an affine point set");
    return build_code(xstar, d, monomials_up_to_degree(xstar.dim(), d), canonical_points(xstar), {});
}

EvalCode projective_code(const PointSet& x, std::uint32_t d) {
    if (x.kind() != PointKind::projective)
        throw Error(Errc::invalid_argument, "projective_code needs a projective point set");
    return build_code(x, d, monomials_of_degree(x.dim(), d), canonical_points(x), {});
}

EvalCode closure_code(const PointSet& y, std::uint32_t d) {
    if (y.kind() != PointKind::closure) throw Error(Errc::invalid_argument, "closure_code needs a closure point set");
    const Field& f = y.field();
    std::vector<std::vector<Elem>> reps;
    std::vector<Elem> scale;
    reps.reserve(y.size());
    scale.reserve(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        auto r = y.raw(i);
        if (r.back() != f.one())
            throw Error(Errc::invalid_argument, "closure point " + std::to_string(i) + " is not stored as (Q, 1)");
        if (r[0] == f.zero())
            throw Error(Errc::zero_coordinate, "closure point " + std::to_string(i) + " has Q_1 = 0");
        reps.emplace_back(r.begin(), r.end());
        scale.push_back(f.pow(r[0], -std::int64_t(d)));
    }
    return build_code(y, d, monomials_of_degree(y.dim(), d), reps, scale);
}

DistanceResult minimum_distance(const EvalCode& code, std::uint64_t budget) {
    DistanceOptions opts;
    opts.budget = budget;
    opts.transitive = code.transitive;
    return minimum_distance(code.field, code.generator, opts);
}

CodeParameters code_parameters(const EvalCode& code, const DistanceResult& r) {
    CodeParameters p;
    p.n = code.length;
    p.k = code.dimension;
    p.d = r.distance;
    p.exact = r.exact;
    p.lo = r.exact ? r.distance : r.lower;
    p.hi = r.exact ? r.distance : r.upper;
    return p;
}

std::uint64_t torus_distance(std::uint32_t n, std::uint32_t q, std::uint32_t d) {
    if (d < 1) throw Error(Errc::invalid_degree, "torus distance needs d >= 1");
    if (n < 1) throw Error(Errc::invalid_argument, "torus distance needs n >= 1");
    if (q < 3) throw Error(Errc::invalid_argument, "torus distance needs q >= 3");
    const std::uint64_t step = q - 2;
    if (std::uint64_t(d) >= step * (n - 1)) return 1;
    const std::uint64_t k = (d + step - 1) / step - 1;
    const std::uint64_t l = d - k * step;
    return saturating_pow(q - 1, n - (k + 2)) * (q - 1 - l);
}

Prediction distance_bounds_bipartite(const Clutter& g, std::uint32_t q, std::uint32_t d) {
    const auto facts = graph_facts(g);
    if (!facts.connected_bipartite())
        throw Error(Errc::not_connected_bipartite, "distance bounds need a connected bipartite graph");
    const auto a = std::uint32_t(facts.bipartition->first.size());
    const auto b = std::uint32_t(facts.bipartition->second.size());
    return interval_prediction("delta_X(" + std::to_string(d) + ")",
                               torus_distance(a, q, d) * torus_distance(b, q, d),
                               torus_distance(a + b - 1, q, d), "bipartite-distance-bounds");
}

bool singleton_check(const EvalCode& code, std::uint64_t delta) noexcept {
    return delta + code.dimension <= code.length + 1;
}

DeltaYCheck delta_y_relation_check(const Clutter& c, const Field& f, std::uint32_t d, std::uint64_t budget) {
    DeltaYCheck out;
    const auto x = projective_toric_set(c, f);
    const auto y = projective_closure_points(c, f);
    out.delta_x = checked_distance(projective_code(x, d), budget);
    out.delta_y = checked_distance(closure_code(y, d), budget);
    out.unit_transversal = find_unit_transversal(c).has_value();
    // a single edge has delta_Y(1) = q - 2, so the equality needs n >= 3
    if (c.is_graph() && d == 1 && c.num_vertices() >= 3) out.equality_applies = graph_facts(c).connected_bipartite();
    const std::uint64_t scaled = std::uint64_t(f.order() - 1) * out.delta_x;
    out.inequality = out.delta_y <= scaled;
    out.equality = out.delta_y == scaled;
    return out;
}

BridgeCheck bridge_check(const Clutter& c, const Field& f, std::uint32_t d, std::uint64_t budget) {
    const auto xstar = affine_toric_set(c, f);
    const auto y = projective_closure_points(c, f);
    const auto ca = affine_code(xstar, d);
    const auto cy = closure_code(y, d);
    auto ra = minimum_distance(ca, budget);
    auto ry = minimum_distance(cy, budget);
    if (!ra.exact || !ry.exact)
        throw Error(Errc::budget_exceeded, "bridge check needs exact distances");
    BridgeCheck out;
    out.affine = code_parameters(ca, ra);
    out.closure = code_parameters(cy, ry);
    out.hilbert_y = hilbert_function(y, d);
    out.hilbert_xstar = hilbert_function(xstar, d);
    return out;
}

}  // namespace toric
