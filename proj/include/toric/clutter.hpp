#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "toric/error.hpp"

namespace toric {

/// 0/1 exponent vector of an edge monomial, one entry per vertex.
using CharVec = std::vector<std::uint8_t>;

/// A family of vertex subsets, none contained in another.
///
/// Vertices are 0-based internally; the i-th edge corresponds to the i-th
/// coordinate t_i of the toric sets built from the clutter. Each edge is stored
/// sorted. Vertices lying in no edge are allowed.
class Clutter {
public:
    /// Throws Errc::clutter_axiom_violation when one edge is contained in
    /// another (duplicates included) and Errc::invalid_argument for empty edges,
    /// repeated vertices or out-of-range indices.
    Clutter(int num_vertices, std::vector<std::vector<int>> edges);

    static Clutter from_one_based(int num_vertices, const std::vector<std::vector<int>>& edges);

    int num_vertices() const noexcept { return n_; }
    int num_edges() const noexcept { return int(edges_.size()); }
    const std::vector<std::vector<int>>& edges() const noexcept { return edges_; }
    const std::vector<int>& edge(int i) const { return edges_.at(std::size_t(i)); }
    std::vector<std::vector<int>> one_based_edges() const;

    bool is_graph() const noexcept;

    /// Same vertex set, edges restricted to the given indices (in that order).
    Clutter with_edges(const std::vector<int>& indices) const;

    friend bool operator==(const Clutter&, const Clutter&) = default;

private:
    int n_;
    std::vector<std::vector<int>> edges_;
};

std::vector<CharVec> characteristic_vectors(const Clutter& c);

struct Bipartition {
    std::vector<int> first;   // side containing the lowest vertex of each component
    std::vector<int> second;
};

/// Structural facts the degree/regularity theorems condition on. Everything
/// except free_vertices is absent for clutters that are not graphs.
struct GraphFacts {
    bool is_graph = false;
    std::optional<bool> connected;
    std::optional<int> components;
    std::optional<Bipartition> bipartition;  // present iff the graph is bipartite
    std::optional<bool> tree;
    std::optional<bool> unicyclic;
    std::optional<int> cycle_length;         // the cycle of a unicyclic graph
    std::optional<bool> hamiltonian;
    std::optional<int> largest_cycle;        // absent for forests
    std::vector<int> free_vertices;

    bool bipartite() const noexcept { return bipartition.has_value(); }
    bool connected_bipartite() const noexcept { return connected.value_or(false) && bipartite(); }
    bool unicyclic_odd() const noexcept {
        return unicyclic.value_or(false) && cycle_length && (*cycle_length % 2 == 1);
    }
};

/// Exhaustive cycle searches refuse graphs larger than this.
inline constexpr int kMaxCycleSearchVertices = 24;

/// Throws Errc::size_limit for graphs with more than kMaxCycleSearchVertices vertices.
GraphFacts graph_facts(const Clutter& c);

std::optional<int> is_k_uniform(const Clutter& c);

/// Some A with |A ∩ e| = 1 for every edge e, by backtracking over vertices in
/// index order (inclusion tried first). Vertices in no edge are never chosen.
std::optional<std::vector<int>> find_unit_transversal(const Clutter& c);

/// Kruskal scan in edge order. Throws Errc::not_a_graph / Errc::not_connected.
Clutter spanning_tree(const Clutter& g);

/// Maximal cliques as edges, sorted lexicographically. Throws Errc::not_a_graph.
Clutter clique_clutter(const Clutter& g);
bool is_chordal(const Clutter& g);

}  // namespace toric
