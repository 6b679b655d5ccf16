#include "toric/theory.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "toric/points.hpp"

namespace toric {

namespace {

std::uint64_t spow(std::uint64_t b, std::int64_t e) { return e < 0 ? 0 : saturating_pow(b, std::uint64_t(e)); }

const GraphFacts& require_connected_bipartite(const GraphFacts& f) {
    if (!f.is_graph || !f.connected_bipartite())
        throw Error(Errc::not_connected_bipartite, "theorem requires a connected bipartite graph");
    return f;
}

// Graph on the same vertices joining every pair that shares an edge of c.
std::optional<Clutter> two_section(const Clutter& c) {
    std::set<std::vector<int>> pairs;
    for (const auto& e : c.edges())
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j) pairs.insert({e[i], e[j]});
    if (pairs.empty()) return std::nullopt;
    return Clutter(c.num_vertices(), {pairs.begin(), pairs.end()});
}

bool same_edge_set(const Clutter& a, const Clutter& b) {
    auto ea = a.edges(), eb = b.edges();
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    return a.num_vertices() == b.num_vertices() && ea == eb;
}

}  // namespace

Prediction exact_prediction(std::string quantity, std::uint64_t value, std::string theorem) {
    return Prediction{std::move(quantity), value, value, std::move(theorem), true};
}

Prediction interval_prediction(std::string quantity, std::uint64_t lo, std::uint64_t hi, std::string theorem) {
    if (lo > hi) throw Error(Errc::invalid_argument, "prediction interval is empty");
    return Prediction{std::move(quantity), lo, hi, std::move(theorem), true};
}

Prediction refused_prediction(std::string quantity, std::string theorem) {
    return Prediction{std::move(quantity), 0, UINT64_MAX, std::move(theorem), false};
}

std::vector<Prediction> predict_cardinalities(const Clutter& c, std::uint32_t q) {
    const std::uint64_t q1 = q - 1;
    std::vector<Prediction> out;
    out.push_back(interval_prediction("|Y|/|X|", 1, q1, "y-card-bound"));
    if (find_unit_transversal(c)) out.push_back(exact_prediction("|Y|/|X|", q1, "unit-transversal-y-card"));
    if (auto k = is_k_uniform(c); k && std::gcd<std::uint64_t>(q1, std::uint64_t(*k)) == 1)
        out.push_back(exact_prediction("|Y|/|X|", q1, "uniform-coprime-y-card"));
    if (!c.is_graph()) return out;

    const GraphFacts f = graph_facts(c);
    if (f.bipartite())
        out.push_back(exact_prediction("|Y|/|X|", q1, "graph-y-card-bipartite"));
    else if (q1 % 2 == 1)
        out.push_back(exact_prediction("|Y|/|X|", q1, "graph-y-card-odd-order"));
    else
        out.push_back(exact_prediction("|Y|/|X|", q1 / 2, "graph-y-card-nonbipartite"));

    const std::int64_t n = c.num_vertices();
    if (!*f.connected) {
        out.push_back(refused_prediction("|X|", "connected-graph-x-card"));
        out.push_back(refused_prediction("|Y|", "connected-graph-y-card"));
        return out;
    }
    if (f.bipartite()) {
        out.push_back(exact_prediction("|X|", spow(q1, n - 2), "connected-graph-x-card"));
        out.push_back(exact_prediction("|Y|", spow(q1, n - 1), "connected-graph-y-card"));
    } else {
        out.push_back(exact_prediction("|X|", spow(q1, n - 1), "connected-graph-x-card"));
        out.push_back(exact_prediction("|Y|", q % 2 == 0 ? spow(q1, n) : spow(q1, n) / 2, "connected-graph-y-card"));
    }
    return out;
}

TorusInvariants torus_invariants(std::uint32_t s, std::uint32_t q) {
    if (s < 1) throw Error(Errc::invalid_argument, "torus needs s >= 1");
    if (q < 3) throw Error(Errc::field_too_small, "q must be at least 3");
    TorusInvariants t;
    t.degree = saturating_pow(q - 1, s - 1);
    t.regularity = std::uint64_t(s - 1) * (q - 2);
    t.h = {1};
    for (std::uint32_t i = 1; i < s; ++i) t.h = convolve_with_ones(t.h, q - 1);
    return t;
}

Prediction reg_bounds_bipartite(const Clutter& g, std::uint32_t q) {
    if (!g.is_graph()) throw Error(Errc::not_connected_bipartite, "theorem requires a connected bipartite graph");
    const GraphFacts f = graph_facts(g);
    require_connected_bipartite(f);
    std::uint64_t a = f.bipartition->first.size(), b = f.bipartition->second.size();
    if (a < b) std::swap(a, b);
    const std::uint64_t lo = (a - 1) * (q - 2), hi = (a + b - 2) * (q - 2);
    if (std::uint64_t(g.num_edges()) == a * b) return exact_prediction("reg(X)", lo, "complete-bipartite-reg");
    if (*f.tree) return exact_prediction("reg(X)", hi, "tree-reg");
    return interval_prediction("reg(X)", lo, hi, "bipartite-reg-bounds");
}

std::vector<Prediction> reg_exact_families(const Clutter& c, std::uint32_t q) {
    std::vector<Prediction> out;
    const std::uint64_t q1 = q - 1, q2 = q - 2;
    const std::uint64_t n = std::uint64_t(c.num_vertices());
    const std::uint64_t s = std::uint64_t(c.num_edges());

    if (c.is_graph()) {
        const GraphFacts f = graph_facts(c);
        if (*f.tree) {
            out.push_back(exact_prediction("reg(X)", (n - 2) * q2, "tree-reg"));
            out.push_back(exact_prediction("deg(X)", spow(q1, std::int64_t(n) - 2), "tree-reg"));
        }
        if (f.connected_bipartite()) {
            if (*f.hamiltonian) {
                const std::uint64_t k = n / 2;
                out.push_back(exact_prediction("reg(X)", (k - 1) * q2, "hamiltonian-bipartite-reg"));
                out.push_back(exact_prediction("deg(X)", spow(q1, std::int64_t(n) - 2), "hamiltonian-bipartite-reg"));
                const std::uint64_t deg = spow(q1, std::int64_t(n) - 2);
                if (deg >= s - 1) out.push_back(interval_prediction("reg(X)", 0, deg - (s - 1), "eisenbud-goto"));
            }
            if (*f.unicyclic) {
                const std::uint64_t k = std::uint64_t(*f.cycle_length) / 2;
                out.push_back(exact_prediction("reg(X)", q2 * (n - k - 1), "unicyclic-bipartite-reg"));
            }
            if (f.largest_cycle) {
                const std::uint64_t k = std::uint64_t(*f.largest_cycle) / 2;
                out.push_back(interval_prediction("reg(X)", 0, q2 * (n - k - 1), "largest-cycle-reg-bound"));
            }
        }
    }

    if (auto g = two_section(c)) {
        if (is_chordal(*g) && same_edge_set(clique_clutter(*g), c)) {
            out.push_back(exact_prediction("reg(X)", q2 * (s - 1), "chordal-clique-reg"));
            out.push_back(exact_prediction("deg(X)", spow(q1, std::int64_t(s) - 1), "chordal-clique-reg"));
        }
    }
    return out;
}

std::vector<Prediction> regularity_predictions(const Clutter& c, std::uint32_t q) {
    std::vector<Prediction> out;
    if (c.is_graph()) {
        const GraphFacts f = graph_facts(c);
        if (f.connected_bipartite())
            out.push_back(reg_bounds_bipartite(c, q));
        else
            out.push_back(refused_prediction("reg(X)", "bipartite-reg-bounds"));
    }
    auto fam = reg_exact_families(c, q);
    out.insert(out.end(), fam.begin(), fam.end());
    return out;
}

std::optional<Prediction> combine(const std::vector<Prediction>& preds, const std::string& quantity) {
    std::optional<Prediction> acc;
    for (const auto& p : preds) {
        if (p.quantity != quantity || !p.hypotheses) continue;
        if (!acc) {
            acc = p;
            continue;
        }
        if (p.lo > acc->hi || p.hi < acc->lo)
            throw Error(Errc::inconsistent_theorems, quantity + ": " + p.theorem + " contradicts " + acc->theorem);
        acc->lo = std::max(acc->lo, p.lo);
        acc->hi = std::min(acc->hi, p.hi);
        acc->theorem += "+" + p.theorem;
    }
    return acc;
}

FreeVertexCheck free_vertex_reduction_check(const Clutter& c, const Field& f) {
    if (c.num_edges() < 2) throw Error(Errc::invalid_argument, "free-vertex reduction needs at least two edges");
    std::vector<int> count(std::size_t(c.num_vertices()), 0), owner(std::size_t(c.num_vertices()), -1);
    for (int i = 0; i < c.num_edges(); ++i)
        for (int v : c.edge(i)) {
            ++count[std::size_t(v)];
            owner[std::size_t(v)] = i;
        }
    FreeVertexCheck out;
    for (int v = c.num_vertices() - 1; v >= 0; --v)
        if (count[std::size_t(v)] == 1) {
            out.vertex = v;
            out.edge = owner[std::size_t(v)];
            break;
        }
    if (out.vertex < 0) throw Error(Errc::no_free_vertex, "clutter has no free vertex");

    std::vector<int> order;
    for (int i = 0; i < c.num_edges(); ++i)
        if (i != out.edge) order.push_back(i);
    const Clutter reduced = c.with_edges(order);
    order.push_back(out.edge);
    const Clutter full = c.with_edges(order);

    const auto px = hilbert_profile(projective_toric_set(full, f));
    const auto pr = hilbert_profile(projective_toric_set(reduced, f));
    out.reg_x = px.regularity;
    out.reg_reduced = pr.regularity;
    out.deg_x = px.degree;
    out.deg_reduced = pr.degree;
    const std::uint64_t q = f.order();
    out.holds = out.reg_x == out.reg_reduced + (q - 2) && out.deg_x == (q - 1) * out.deg_reduced;
    return out;
}

bool eisenbud_goto_check(const HilbertProfile& profile, std::uint32_t s) {
    if (s == 0) return false;
    return std::uint64_t(profile.regularity) + (s - 1) <= profile.degree;
}

bool eisenbud_goto_lemma(std::uint64_t k, std::uint64_t q) {
    if (k < 2 || q < 3) throw Error(Errc::invalid_argument, "lemma needs k >= 2 and q >= 3");
    const unsigned __int128 rhs = (unsigned __int128)(k - 1) * (q + k - 1);
    unsigned __int128 lhs = 1;
    for (std::uint64_t i = 0; i < 2 * k - 2; ++i) {
        lhs *= (q - 1);
        if (lhs >= rhs) return true;
    }
    return lhs >= rhs;
}

std::vector<Prediction> predict_ci(const Clutter& c, std::uint32_t q) {
    std::vector<Prediction> out;
    if (!c.is_graph()) return out;
    const GraphFacts f = graph_facts(c);
    if (!*f.connected) {
        out.push_back(refused_prediction("ci(X)", "connected-graph-ci-x"));
        out.push_back(refused_prediction("ci(Y)", "connected-graph-ci-y"));
        return out;
    }
    const bool tree = *f.tree, odd = f.unicyclic_odd();
    out.push_back(exact_prediction("ci(X)", tree || odd, "connected-graph-ci-x"));
    out.push_back(exact_prediction("ci(Y)", tree || (odd && q % 2 == 0), "connected-graph-ci-y"));
    return out;
}

CiReport ci_report(const Clutter& c, const Field& f, std::uint64_t budget) {
    CiReport r;
    r.ci_x = is_projective_torus(projective_toric_set(c, f, budget));
    r.ci_y = is_affine_torus(affine_toric_set(c, f, budget));
    r.implication_holds = !r.ci_y || r.ci_x;
    for (const auto& p : predict_ci(c, f.order())) {
        if (!p.hypotheses) continue;
        if (p.quantity == "ci(X)") {
            r.predicted_ci_x = p.lo == 1;
            r.theorem_x = p.theorem;
        } else {
            r.predicted_ci_y = p.lo == 1;
            r.theorem_y = p.theorem;
        }
    }
    if (!r.predicted_ci_y && c.is_graph() && (f.order() % 2 == 0 || graph_facts(c).bipartite())) {
        r.predicted_ci_y = r.ci_x;
        r.theorem_y = "graph-ci-y-iff-ci-x";
    }
    if (r.predicted_ci_x) r.agree_x = *r.predicted_ci_x == r.ci_x;
    if (r.predicted_ci_y) r.agree_y = *r.predicted_ci_y == r.ci_y;
    return r;
}

}  // namespace toric
