#include "toric/hilbert.hpp"

#include <numeric>
#include <unordered_set>

namespace toric {

namespace {

struct ColumnHash {
    std::size_t operator()(const std::vector<Elem>& v) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (Elem e : v) h = (h ^ e) * 1099511628211ull;
        return std::size_t(h);
    }
};

using ColumnSet = std::unordered_set<std::vector<Elem>, ColumnHash>;

void check_entries(std::size_t columns, std::size_t n, std::uint64_t max_entries) {
    if (std::uint64_t(columns) * n > max_entries)
        throw Error(Errc::size_limit, "evaluation matrix would exceed " + std::to_string(max_entries) + " entries");
}

// Columns of degree d are the products of degree-(d-1) columns with one
// generator column. Requires the degree-(d-1) span to sit inside the degree-d
// span, which holds for the affine filtration and for projective points
// rescaled so one coordinate is identically 1.
class NestedEngine {
public:
    NestedEngine(const Field& f, std::vector<std::vector<Elem>> gens, std::size_t n, std::uint64_t max_entries)
        : f_(f), gens_(std::move(gens)), n_(n), max_(max_entries), basis_(f, n) {
        std::vector<Elem> ones(n, f.one());
        seen_.insert(ones);
        basis_.insert(ones);
        frontier_.push_back(std::move(ones));
    }

    std::uint64_t rank() const noexcept { return basis_.rank(); }
    bool full() const noexcept { return basis_.full(); }

    void advance() {
        if (basis_.full()) return;
        std::vector<std::vector<Elem>> next;
        std::vector<Elem> prod(n_);
        for (const auto& c : frontier_) {
            for (const auto& g : gens_) {
                for (std::size_t i = 0; i < n_; ++i) prod[i] = f_.mul(c[i], g[i]);
                if (seen_.count(prod)) continue;
                seen_.insert(prod);
                check_entries(seen_.size(), n_, max_);
                basis_.insert(prod);
                next.push_back(prod);
            }
        }
        frontier_ = std::move(next);
    }

private:
    const Field& f_;
    std::vector<std::vector<Elem>> gens_;
    std::size_t n_;
    std::uint64_t max_;
    ColumnSet seen_;
    std::vector<std::vector<Elem>> frontier_;
    IncrementalBasis basis_;
};

// Index of a coordinate that is nonzero at every point, if any.
std::optional<std::size_t> nowhere_zero_coordinate(const PointSet& x) {
    for (std::size_t j = 0; j < x.dim(); ++j) {
        bool ok = true;
        for (std::size_t i = 0; i < x.size() && ok; ++i) ok = x.point(i)[j] != 0;
        if (ok) return j;
    }
    return std::nullopt;
}

std::optional<NestedEngine> make_engine(const PointSet& x, std::uint64_t max_entries) {
    const Field& f = x.field();
    const std::size_t n = x.size();
    std::vector<std::vector<Elem>> gens(x.dim(), std::vector<Elem>(n));
    if (!x.projective()) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < x.dim(); ++j) gens[j][i] = x.point(i)[j];
    } else {
        auto j0 = nowhere_zero_coordinate(x);
        if (!j0) return std::nullopt;
        for (std::size_t i = 0; i < n; ++i) {
            const Elem s = f.inv(x.point(i)[*j0]);
            for (std::size_t j = 0; j < x.dim(); ++j) gens[j][i] = f.mul(x.point(i)[j], s);
        }
        gens.erase(gens.begin() + std::ptrdiff_t(*j0));
    }
    check_entries(gens.size() + 1, n, max_entries);
    return NestedEngine(f, std::move(gens), n, max_entries);
}

// Projective sets where every coordinate vanishes somewhere: rank of the
// distinct degree-d columns, one degree at a time.
std::uint64_t rank_at_degree(const PointSet& x, std::uint32_t d, std::uint64_t max_entries) {
    const std::size_t n = x.size();
    IncrementalBasis basis(x.field(), n);
    ColumnSet seen;
    for (const auto& m : monomials_of_degree(x.dim(), d)) {
        std::vector<Elem> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = eval_monomial(x.field(), x.point(i), m);
        if (!seen.insert(col).second) continue;
        check_entries(seen.size(), n, max_entries);
        basis.insert(std::move(col));
        if (basis.full()) break;
    }
    return basis.rank();
}

}  // namespace

std::uint32_t total_degree(const Monomial& m) noexcept { return std::accumulate(m.begin(), m.end(), std::uint32_t(0)); }

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, std::uint32_t d) {
    std::vector<Monomial> out;
    if (num_vars == 0) {
        if (d == 0) out.emplace_back();
        return out;
    }
    Monomial m(num_vars, 0);
    // recursive split: exponent of variable i runs from the remaining degree down to 0
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
        if (i + 1 == num_vars) {
            m[i] = left;
            out.push_back(m);
            return;
        }
        for (std::uint32_t e = left + 1; e-- > 0;) {
            m[i] = e;
            self(self, i + 1, left - e);
        }
        m[i] = 0;
    };
    rec(rec, 0, d);
    return out;
}

std::vector<Monomial> monomials_up_to_degree(std::size_t num_vars, std::uint32_t d) {
    std::vector<Monomial> out;
    for (std::uint32_t e = 0; e <= d; ++e) {
        auto part = monomials_of_degree(num_vars, e);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > UINT64_MAX) return UINT64_MAX;
    }
    return std::uint64_t(r);
}

Elem eval_monomial(const Field& f, std::span<const Elem> p, const Monomial& m) {
    Elem acc = f.one();
    for (std::size_t j = 0; j < m.size(); ++j)
        if (m[j] != 0) acc = f.mul(acc, f.pow(p[j], m[j]));
    return acc;
}

Matrix eval_matrix(const PointSet& x, const std::vector<Monomial>& monomials) {
    check_entries(monomials.size(), x.size(), kDefaultMatrixEntries);
    Matrix m(x.size(), monomials.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        auto p = x.raw(i);
        for (std::size_t j = 0; j < monomials.size(); ++j) m.at(i, j) = eval_monomial(x.field(), p, monomials[j]);
    }
    return m;
}

std::uint64_t hilbert_function(const PointSet& x, std::uint32_t d, std::uint64_t max_entries) {
    if (x.size() == 0) return 0;
    auto engine = make_engine(x, max_entries);
    if (!engine) return rank_at_degree(x, d, max_entries);
    for (std::uint32_t e = 0; e < d && !engine->full(); ++e) engine->advance();
    return engine->rank();
}

HilbertProfile hilbert_profile(const PointSet& x, std::uint64_t max_entries) {
    const std::uint64_t n = x.size();
    std::vector<std::uint64_t> H;
    if (n == 0) return profile_from_values({0});
    auto engine = make_engine(x, max_entries);
    for (std::uint32_t d = 0;; ++d) {
        if (d > n) throw Error(Errc::invalid_argument, "Hilbert function failed to reach the number of points");
        if (engine) {
            if (d > 0) engine->advance();
            H.push_back(engine->rank());
        } else {
            H.push_back(rank_at_degree(x, d, max_entries));
        }
        if (H.back() == n) break;
    }
    return profile_from_values(std::move(H));
}

HilbertProfile profile_from_values(std::vector<std::uint64_t> H) {
    HilbertProfile p;
    p.degree = H.back();
    std::size_t r = H.size() - 1;
    while (r > 0 && H[r - 1] == p.degree) --r;
    H.resize(r + 1);
    p.regularity = std::uint32_t(r);
    p.h.resize(H.size());
    for (std::size_t d = 0; d < H.size(); ++d)
        p.h[d] = std::int64_t(H[d]) - (d == 0 ? 0 : std::int64_t(H[d - 1]));
    p.H = std::move(H);
    return p;
}

std::vector<std::int64_t> convolve_with_ones(const std::vector<std::int64_t>& h, std::uint32_t length) {
    if (h.empty() || length == 0) return {};
    std::vector<std::int64_t> out(h.size() + length - 1, 0);
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::uint32_t j = 0; j < length; ++j) out[i + j] += h[i];
    return out;
}

bool series_factorization_check(const HilbertProfile& x, const HilbertProfile& y, std::uint32_t q) {
    return y.h == convolve_with_ones(x.h, q - 1);
}

bool series_factorization_check(const PointSet& x, const PointSet& y) {
    if (x.kind() != PointKind::projective || y.kind() != PointKind::closure || !(x.field() == y.field()))
        throw Error(Errc::invalid_argument, "expected the projective set X and the closure set Y over one field");
    return series_factorization_check(hilbert_profile(x), hilbert_profile(y), x.field().order());
}

}  // namespace toric
