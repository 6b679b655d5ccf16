#include "toric/clutter.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace toric {

namespace {

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::vector<int>> adjacency(const Clutter& g) {
    std::vector<std::vector<int>> adj(std::size_t(g.num_vertices()));
    for (const auto& e : g.edges()) {
        adj[std::size_t(e[0])].push_back(e[1]);
        adj[std::size_t(e[1])].push_back(e[0]);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(std::size_t(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[std::size_t(x)] != x) {
            parent[std::size_t(x)] = parent[std::size_t(parent[std::size_t(x)])];
            x = parent[std::size_t(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::size_t(std::max(a, b))] = std::min(a, b);
        return true;
    }
};

// Longest simple cycle (length >= 3), 0 for forests. Each cycle is rooted at
// its lowest vertex so every cycle is explored from one start only.
class CycleSearch {
public:
    explicit CycleSearch(const std::vector<std::vector<int>>& adj) : adj_(adj), on_path_(adj.size(), false) {}

    int longest() {
        const int n = int(adj_.size());
        for (int s = 0; s < n && best_ < n; ++s) {
            root_ = s;
            on_path_[std::size_t(s)] = true;
            extend(s, 1);
            on_path_[std::size_t(s)] = false;
        }
        return best_;
    }

private:
    void extend(int v, int length) {
        if (best_ == int(adj_.size())) return;
        for (int w : adj_[std::size_t(v)]) {
            if (w == root_) {
                if (length >= 3) best_ = std::max(best_, length);
                continue;
            }
            if (w < root_ || on_path_[std::size_t(w)]) continue;
            on_path_[std::size_t(w)] = true;
            extend(w, length + 1);
            on_path_[std::size_t(w)] = false;
        }
    }

    const std::vector<std::vector<int>>& adj_;
    std::vector<bool> on_path_;
    int root_ = 0;
    int best_ = 0;
};

class TransversalSearch {
public:
    explicit TransversalSearch(const Clutter& c)
        : c_(c), incident_(std::size_t(c.num_vertices())), hits_(std::size_t(c.num_edges()), 0),
          open_(std::size_t(c.num_edges()), 0), chosen_(std::size_t(c.num_vertices()), false) {
        for (int i = 0; i < c.num_edges(); ++i) {
            for (int v : c.edge(i)) incident_[std::size_t(v)].push_back(i);
            open_[std::size_t(i)] = int(c.edge(i).size());
        }
    }

    std::optional<std::vector<int>> run() {
        if (!search(0)) return std::nullopt;
        std::vector<int> out;
        for (int v = 0; v < c_.num_vertices(); ++v)
            if (chosen_[std::size_t(v)]) out.push_back(v);
        return out;
    }

private:
    bool search(int v) {
        if (v == c_.num_vertices()) return true;
        const auto& inc = incident_[std::size_t(v)];
        if (inc.empty()) return search(v + 1);

        bool can_include = std::all_of(inc.begin(), inc.end(), [&](int e) { return hits_[std::size_t(e)] == 0; });
        if (can_include) {
            for (int e : inc) {
                ++hits_[std::size_t(e)];
                --open_[std::size_t(e)];
            }
            chosen_[std::size_t(v)] = true;
            if (search(v + 1)) return true;
            chosen_[std::size_t(v)] = false;
            for (int e : inc) {
                --hits_[std::size_t(e)];
                ++open_[std::size_t(e)];
            }
        }
        // excluding v must leave every unhit edge some undecided vertex
        bool can_exclude = std::all_of(inc.begin(), inc.end(), [&](int e) {
            return hits_[std::size_t(e)] > 0 || open_[std::size_t(e)] > 1;
        });
        if (can_exclude) {
            for (int e : inc) --open_[std::size_t(e)];
            if (search(v + 1)) return true;
            for (int e : inc) ++open_[std::size_t(e)];
        }
        return false;
    }

    const Clutter& c_;
    std::vector<std::vector<int>> incident_;
    std::vector<int> hits_;
    std::vector<int> open_;
    std::vector<bool> chosen_;
};

void require_graph(const Clutter& g, const char* what) {
    if (!g.is_graph()) throw Error(Errc::not_a_graph, std::string(what) + " requires a graph");
}

}  // namespace

Clutter::Clutter(int num_vertices, std::vector<std::vector<int>> edges) : n_(num_vertices), edges_(std::move(edges)) {
    if (n_ < 1) throw Error(Errc::invalid_argument, "a clutter needs at least one vertex");
    if (edges_.empty()) throw Error(Errc::invalid_argument, "a clutter needs at least one edge");
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto& e = edges_[i];
        if (e.empty()) throw Error(Errc::invalid_argument, "edge " + std::to_string(i + 1) + " is empty");
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw Error(Errc::invalid_argument, "edge " + std::to_string(i + 1) + " repeats a vertex");
        if (e.front() < 0 || e.back() >= n_)
            throw Error(Errc::invalid_argument,
                        "edge " + std::to_string(i + 1) + " has a vertex outside [1, " + std::to_string(n_) + "]");
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        for (std::size_t j = 0; j < edges_.size(); ++j) {
            if (i == j) continue;
            if (is_subset(edges_[i], edges_[j]))
                throw Error(Errc::clutter_axiom_violation, "edge " + std::to_string(i + 1) +
                                                               " is contained in edge " + std::to_string(j + 1));
        }
    }
}

Clutter Clutter::from_one_based(int num_vertices, const std::vector<std::vector<int>>& edges) {
    std::vector<std::vector<int>> shifted = edges;
    for (auto& e : shifted)
        for (auto& v : e) --v;
    return Clutter(num_vertices, std::move(shifted));
}

std::vector<std::vector<int>> Clutter::one_based_edges() const {
    auto out = edges_;
    for (auto& e : out)
        for (auto& v : e) ++v;
    return out;
}

bool Clutter::is_graph() const noexcept {
    return std::all_of(edges_.begin(), edges_.end(), [](const auto& e) { return e.size() == 2; });
}

Clutter Clutter::with_edges(const std::vector<int>& indices) const {
    std::vector<std::vector<int>> sub;
    sub.reserve(indices.size());
    for (int i : indices) sub.push_back(edge(i));
    return Clutter(n_, std::move(sub));
}

std::vector<CharVec> characteristic_vectors(const Clutter& c) {
    std::vector<CharVec> out;
    out.reserve(std::size_t(c.num_edges()));
    for (const auto& e : c.edges()) {
        CharVec v(std::size_t(c.num_vertices()), 0);
        for (int x : e) v[std::size_t(x)] = 1;
        out.push_back(std::move(v));
    }
    return out;
}

GraphFacts graph_facts(const Clutter& c) {
    GraphFacts f;
    const int n = c.num_vertices();
    std::vector<int> degree(std::size_t(n), 0);
    for (const auto& e : c.edges())
        for (int v : e) ++degree[std::size_t(v)];
    for (int v = 0; v < n; ++v)
        if (degree[std::size_t(v)] == 1) f.free_vertices.push_back(v);

    f.is_graph = c.is_graph();
    if (!f.is_graph) return f;
    if (n > kMaxCycleSearchVertices)
        throw Error(Errc::size_limit, "cycle searches are limited to " + std::to_string(kMaxCycleSearchVertices) +
                                          " vertices, graph has " + std::to_string(n));

    const auto adj = adjacency(c);
    const int s = c.num_edges();

    // components and 2-colouring in one BFS sweep
    std::vector<int> colour(std::size_t(n), -1);
    int components = 0;
    bool bipartite = true;
    for (int root = 0; root < n; ++root) {
        if (colour[std::size_t(root)] != -1) continue;
        ++components;
        colour[std::size_t(root)] = 0;
        std::vector<int> queue{root};
        for (std::size_t h = 0; h < queue.size(); ++h) {
            int v = queue[h];
            for (int w : adj[std::size_t(v)]) {
                if (colour[std::size_t(w)] == -1) {
                    colour[std::size_t(w)] = 1 - colour[std::size_t(v)];
                    queue.push_back(w);
                } else if (colour[std::size_t(w)] == colour[std::size_t(v)]) {
                    bipartite = false;
                }
            }
        }
    }
    f.components = components;
    f.connected = components == 1;
    if (bipartite) {
        Bipartition b;
        for (int v = 0; v < n; ++v) (colour[std::size_t(v)] == 0 ? b.first : b.second).push_back(v);
        f.bipartition = std::move(b);
    }

    const int cyclomatic = s - n + components;
    f.tree = *f.connected && s == n - 1;
    f.unicyclic = cyclomatic == 1;
    if (*f.unicyclic) {
        // peel leaves; what remains is the unique cycle (plus nothing else)
        std::vector<int> deg(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) deg[std::size_t(v)] = int(adj[std::size_t(v)].size());
        std::vector<bool> removed(std::size_t(n), false);
        std::vector<int> stack;
        for (int v = 0; v < n; ++v)
            if (deg[std::size_t(v)] <= 1) stack.push_back(v);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (removed[std::size_t(v)]) continue;
            removed[std::size_t(v)] = true;
            for (int w : adj[std::size_t(v)])
                if (!removed[std::size_t(w)] && --deg[std::size_t(w)] <= 1) stack.push_back(w);
        }
        f.cycle_length = int(std::count(removed.begin(), removed.end(), false));
    }

    const int longest = CycleSearch(adj).longest();
    if (longest > 0) f.largest_cycle = longest;
    f.hamiltonian = n >= 3 && longest == n;
    return f;
}

std::optional<int> is_k_uniform(const Clutter& c) {
    const std::size_t k = c.edge(0).size();
    for (const auto& e : c.edges())
        if (e.size() != k) return std::nullopt;
    return int(k);
}

std::optional<std::vector<int>> find_unit_transversal(const Clutter& c) { return TransversalSearch(c).run(); }

Clutter spanning_tree(const Clutter& g) {
    require_graph(g, "spanning_tree");
    UnionFind uf(g.num_vertices());
    std::vector<int> kept;
    for (int i = 0; i < g.num_edges(); ++i)
        if (uf.unite(g.edge(i)[0], g.edge(i)[1])) kept.push_back(i);
    if (int(kept.size()) != g.num_vertices() - 1) throw Error(Errc::not_connected, "graph is not connected");
    return g.with_edges(kept);
}

Clutter clique_clutter(const Clutter& g) {
    require_graph(g, "clique_clutter");
    const int n = g.num_vertices();
    if (n > 64) throw Error(Errc::size_limit, "clique enumeration is limited to 64 vertices");
    std::vector<std::uint64_t> nbr(std::size_t(n), 0);
    for (const auto& e : g.edges()) {
        nbr[std::size_t(e[0])] |= std::uint64_t(1) << e[1];
        nbr[std::size_t(e[1])] |= std::uint64_t(1) << e[0];
    }
    std::vector<std::vector<int>> cliques;
    // Bron-Kerbosch with pivoting
    auto expand = [&](auto&& self, std::uint64_t r, std::uint64_t p, std::uint64_t x) -> void {
        if (p == 0 && x == 0) {
            std::vector<int> clique;
            for (int v = 0; v < n; ++v)
                if (r >> v & 1) clique.push_back(v);
            cliques.push_back(std::move(clique));
            return;
        }
        const std::uint64_t px = p | x;
        const int pivot = std::countr_zero(px);
        std::uint64_t candidates = p & ~nbr[std::size_t(pivot)];
        while (candidates) {
            const int v = std::countr_zero(candidates);
            const std::uint64_t bit = std::uint64_t(1) << v;
            candidates &= candidates - 1;
            self(self, r | bit, p & nbr[std::size_t(v)], x & nbr[std::size_t(v)]);
            p &= ~bit;
            x |= bit;
        }
    };
    const std::uint64_t all = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    expand(expand, 0, all, 0);
    std::sort(cliques.begin(), cliques.end());
    return Clutter(n, std::move(cliques));
}

bool is_chordal(const Clutter& g) {
    require_graph(g, "is_chordal");
    const int n = g.num_vertices();
    auto adj = adjacency(g);
    std::vector<std::vector<bool>> m(std::size_t(n), std::vector<bool>(std::size_t(n), false));
    for (const auto& e : g.edges()) {
        m[std::size_t(e[0])][std::size_t(e[1])] = true;
        m[std::size_t(e[1])][std::size_t(e[0])] = true;
    }
    std::vector<bool> gone(std::size_t(n), false);
    // greedy perfect elimination: a chordal graph always has a simplicial vertex
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n && pick < 0; ++v) {
            if (gone[std::size_t(v)]) continue;
            std::vector<int> live;
            for (int w : adj[std::size_t(v)])
                if (!gone[std::size_t(w)]) live.push_back(w);
            bool simplicial = true;
            for (std::size_t i = 0; i < live.size() && simplicial; ++i)
                for (std::size_t j = i + 1; j < live.size() && simplicial; ++j)
                    simplicial = m[std::size_t(live[i])][std::size_t(live[j])];
            if (simplicial) pick = v;
        }
        if (pick < 0) return false;
        gone[std::size_t(pick)] = true;
    }
    return true;
}

}  // namespace toric
