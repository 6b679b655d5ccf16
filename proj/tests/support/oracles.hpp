#pragma once

// Independent reference computations used only by the tests.

#include <cstdint>
#include <set>
#include <vector>

#include "toric/clutter.hpp"
#include "toric/field.hpp"
#include "toric/linalg.hpp"

namespace support {

// Exponent of t^a pulled back to the torus: sum_j a_j v_j mod (q - 1).
using Character = std::vector<std::uint32_t>;

inline void add_character(Character& acc, const toric::CharVec& v, std::uint32_t m) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = (acc[i] + v[i]) % m;
}

/// Sets of characters reachable with exactly d edge monomials, d = 0..max_d.
/// Distinct characters of the torus are linearly independent, so the size of
/// the degree-d set is H_X(d) and the size of the union up to d is the
/// affine H_{X*}(d) (= H_Y(d)).
inline std::vector<std::set<Character>> character_layers(const toric::Clutter& c, std::uint32_t q, std::uint32_t max_d) {
    const auto vecs = toric::characteristic_vectors(c);
    const std::uint32_t m = q - 1;
    std::vector<std::set<Character>> layers;
    layers.push_back({Character(std::size_t(c.num_vertices()), 0)});
    for (std::uint32_t d = 1; d <= max_d; ++d) {
        std::set<Character> next;
        for (const auto& ch : layers.back())
            for (const auto& v : vecs) {
                Character x = ch;
                add_character(x, v, m);
                next.insert(std::move(x));
            }
        layers.push_back(std::move(next));
    }
    return layers;
}

inline std::vector<std::uint64_t> oracle_projective_hilbert(const toric::Clutter& c, std::uint32_t q, std::uint32_t max_d) {
    std::vector<std::uint64_t> out;
    for (const auto& layer : character_layers(c, q, max_d)) out.push_back(layer.size());
    return out;
}

inline std::vector<std::uint64_t> oracle_affine_hilbert(const toric::Clutter& c, std::uint32_t q, std::uint32_t max_d) {
    std::vector<std::uint64_t> out;
    std::set<Character> acc;
    for (const auto& layer : character_layers(c, q, max_d)) {
        acc.insert(layer.begin(), layer.end());
        out.push_back(acc.size());
    }
    return out;
}

/// |X*| and |X| by walking all (q-1)^n points of the torus.
struct Cardinalities {
    std::uint64_t affine = 0;
    std::uint64_t projective = 0;
};

inline Cardinalities oracle_cardinalities(const toric::Clutter& c, const toric::Field& f) {
    const int n = c.num_vertices();
    const std::uint32_t m = f.order() - 1;
    std::set<std::vector<toric::Elem>> aff, proj;
    std::vector<std::uint32_t> e(std::size_t(n), 0);
    while (true) {
        std::vector<toric::Elem> pt;
        for (const auto& edge : c.edges()) {
            toric::Elem v = f.one();
            for (int i : edge) v = f.mul(v, f.exp(e[std::size_t(i)]));
            pt.push_back(v);
        }
        aff.insert(pt);
        toric::Elem s = f.inv(pt[0]);
        for (auto& x : pt) x = f.mul(x, s);
        proj.insert(pt);
        int i = 0;
        while (i < n && ++e[std::size_t(i)] == m) e[std::size_t(i++)] = 0;
        if (i == n) break;
    }
    return {aff.size(), proj.size()};
}

/// Minimum weight over all q^k - 1 nonzero messages; no scalar reduction.
inline std::uint64_t oracle_min_distance(const toric::Field& f, const toric::Matrix& g) {
    const std::size_t k = g.rows, n = g.cols;
    const std::uint32_t q = f.order();
    std::vector<std::uint32_t> msg(k, 0);
    std::uint64_t best = UINT64_MAX;
    while (true) {
        std::size_t i = 0;
        while (i < k && ++msg[i] == q) msg[i++] = 0;
        if (i == k) break;
        std::vector<toric::Elem> word(n, 0);
        for (std::size_t r = 0; r < k; ++r)
            if (msg[r])
                for (std::size_t j = 0; j < n; ++j) word[j] = f.add(word[j], f.mul(toric::Elem(msg[r]), g.at(r, j)));
        std::uint64_t w = 0;
        for (auto x : word) w += x != 0;
        best = std::min(best, w);
    }
    return best;
}

}  // namespace support
