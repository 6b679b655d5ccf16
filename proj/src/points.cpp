#include "toric/points.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <unordered_set>

namespace toric {

namespace {

std::atomic<std::uint64_t> g_points_enumerated{0};

// Lexicographic row sort with deduplication over a flat row-major buffer.
// Returns the surviving row indices in sorted order.
std::vector<std::size_t> sorted_unique_rows(const std::vector<Elem>& rows, std::size_t dim) {
    const std::size_t n = dim == 0 ? 0 : rows.size() / dim;
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t(0));
    auto row_less = [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(rows.begin() + std::ptrdiff_t(a * dim), rows.begin() + std::ptrdiff_t((a + 1) * dim),
                                            rows.begin() + std::ptrdiff_t(b * dim), rows.begin() + std::ptrdiff_t((b + 1) * dim));
    };
    auto row_eq = [&](std::size_t a, std::size_t b) {
        return std::equal(rows.begin() + std::ptrdiff_t(a * dim), rows.begin() + std::ptrdiff_t((a + 1) * dim),
                          rows.begin() + std::ptrdiff_t(b * dim));
    };
    std::sort(idx.begin(), idx.end(), row_less);
    idx.erase(std::unique(idx.begin(), idx.end(), row_eq), idx.end());
    return idx;
}

// Subgroup of (Z/(q-1))^s generated by the columns of the incidence matrix:
// the exponent vectors (in base beta) of all points of X*.
class LogSubgroup {
public:
    LogSubgroup(std::size_t dim, std::uint32_t modulus) : dim_(dim), mod_(modulus), set_(64, Hash{this}, Eq{this}) {}

    std::size_t size() const noexcept { return data_.size() / dim_; }
    const std::uint32_t* at(std::size_t i) const { return data_.data() + i * dim_; }

    void generate(const std::vector<std::vector<std::uint32_t>>& gens, std::uint64_t budget) {
        push(std::vector<std::uint32_t>(dim_, 0));
        std::vector<std::uint32_t> next(dim_);
        for (std::size_t head = 0; head < size(); ++head) {
            for (const auto& g : gens) {
                const std::uint32_t* cur = at(head);
                for (std::size_t j = 0; j < dim_; ++j) {
                    std::uint32_t v = cur[j] + g[j];
                    next[j] = v >= mod_ ? v - mod_ : v;
                }
                if (push(next) && std::uint64_t(size()) * dim_ > budget)
                    throw Error(Errc::budget_exceeded, "toric set exceeds the point budget of " +
                                                           std::to_string(budget) + " coordinates");
            }
        }
    }

private:
    struct Hash {
        const LogSubgroup* g;
        std::size_t operator()(std::size_t i) const noexcept {
            const std::uint32_t* p = i == kProbe ? g->probe_ : g->at(i);
            std::uint64_t h = 1469598103934665603ull;
            for (std::size_t j = 0; j < g->dim_; ++j) h = (h ^ p[j]) * 1099511628211ull;
            return std::size_t(h);
        }
    };
    struct Eq {
        const LogSubgroup* g;
        bool operator()(std::size_t a, std::size_t b) const noexcept {
            const std::uint32_t* pa = a == kProbe ? g->probe_ : g->at(a);
            const std::uint32_t* pb = b == kProbe ? g->probe_ : g->at(b);
            return std::equal(pa, pa + g->dim_, pb);
        }
    };
    static constexpr std::size_t kProbe = std::size_t(-1);

    bool push(const std::vector<std::uint32_t>& v) {
        probe_ = v.data();
        if (set_.count(kProbe)) return false;
        data_.insert(data_.end(), v.begin(), v.end());
        set_.insert(size() - 1);
        return true;
    }

    std::size_t dim_;
    std::uint32_t mod_;
    std::vector<std::uint32_t> data_;
    const std::uint32_t* probe_ = nullptr;
    std::unordered_set<std::size_t, Hash, Eq> set_;
};

LogSubgroup torus_image(const Clutter& c, const Field& f, std::uint64_t budget) {
    const auto vecs = characteristic_vectors(c);
    const std::size_t s = vecs.size();
    std::vector<std::vector<std::uint32_t>> gens;
    for (int i = 0; i < c.num_vertices(); ++i) {
        std::vector<std::uint32_t> g(s, 0);
        bool any = false;
        for (std::size_t j = 0; j < s; ++j) {
            g[j] = vecs[j][std::size_t(i)];
            any = any || g[j] != 0;
        }
        if (any) gens.push_back(std::move(g));
    }
    LogSubgroup out(s, f.order() - 1);
    out.generate(gens, budget);
    return out;
}

}  // namespace

std::string_view kind_name(PointKind k) noexcept {
    switch (k) {
        case PointKind::affine: return "affine";
        case PointKind::projective: return "projective";
        case PointKind::closure: return "closure";
    }
    return "unknown";
}

PointSet::PointSet(Field field, PointKind kind, std::size_t dim) : field_(std::move(field)), kind_(kind), dim_(dim) {
    if (dim == 0) throw Error(Errc::invalid_argument, "point sets need at least one coordinate");
}

std::span<const Elem> PointSet::raw(std::size_t i) const {
    if (raw_.empty()) return point(i);
    return {raw_.data() + i * dim_, dim_};
}

std::vector<Elem> canonicalize(const Field& f, std::span<const Elem> p) {
    auto it = std::find_if(p.begin(), p.end(), [](Elem e) { return e != 0; });
    if (it == p.end()) throw Error(Errc::zero_coordinate, "the zero vector is not a projective point");
    std::vector<Elem> out(p.begin(), p.end());
    f.scale(out, f.inv(*it));
    return out;
}

void PointSet::insert(std::span<const Elem> p) {
    if (p.size() != dim_) throw Error(Errc::invalid_argument, "point has the wrong number of coordinates");
    for (Elem e : p)
        if (!field_.contains(e)) throw Error(Errc::invalid_argument, "coordinate is not a field element");
    std::vector<Elem> v = projective() ? canonicalize(field_, p) : std::vector<Elem>(p.begin(), p.end());
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        auto q = point(mid);
        if (std::lexicographical_compare(q.begin(), q.end(), v.begin(), v.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < size()) {
        auto q = point(lo);
        if (std::equal(q.begin(), q.end(), v.begin())) return;
    }
    if (!raw_.empty()) {
        std::vector<Elem> r(p.begin(), p.end());
        raw_.insert(raw_.begin() + std::ptrdiff_t(lo * dim_), r.begin(), r.end());
    }
    coords_.insert(coords_.begin() + std::ptrdiff_t(lo * dim_), v.begin(), v.end());
}

bool PointSet::contains(std::span<const Elem> p) const {
    if (p.size() != dim_) return false;
    std::vector<Elem> v;
    try {
        v = projective() ? canonicalize(field_, p) : std::vector<Elem>(p.begin(), p.end());
    } catch (const Error&) {
        return false;
    }
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        auto q = point(mid);
        if (std::lexicographical_compare(q.begin(), q.end(), v.begin(), v.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo == size()) return false;
    auto q = point(lo);
    return std::equal(q.begin(), q.end(), v.begin());
}

PointSet PointSet::from_rows(Field field, PointKind kind, std::size_t dim, std::vector<Elem> rows,
                             std::vector<Elem> raw_rows) {
    PointSet out(std::move(field), kind, dim);
    if (rows.size() % dim != 0 || (!raw_rows.empty() && raw_rows.size() != rows.size()))
        throw Error(Errc::invalid_argument, "row buffer does not match the point dimension");
    if (out.projective()) {
        for (std::size_t i = 0; i < rows.size() / dim; ++i) {
            auto c = canonicalize(out.field_, std::span<const Elem>(rows.data() + i * dim, dim));
            std::copy(c.begin(), c.end(), rows.begin() + std::ptrdiff_t(i * dim));
        }
    }
    const auto keep = sorted_unique_rows(rows, dim);
    out.coords_.reserve(keep.size() * dim);
    for (auto i : keep) out.coords_.insert(out.coords_.end(), rows.begin() + std::ptrdiff_t(i * dim), rows.begin() + std::ptrdiff_t((i + 1) * dim));
    if (!raw_rows.empty()) {
        out.raw_.reserve(keep.size() * dim);
        for (auto i : keep)
            out.raw_.insert(out.raw_.end(), raw_rows.begin() + std::ptrdiff_t(i * dim), raw_rows.begin() + std::ptrdiff_t((i + 1) * dim));
    }
    return out;
}

std::vector<Elem> eval_monomial_map(const Field& f, std::span<const Elem> x, const std::vector<CharVec>& vectors) {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] == 0) throw Error(Errc::zero_coordinate, "x_" + std::to_string(i + 1) + " is zero");
    std::vector<Elem> out;
    out.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.size() != x.size()) throw Error(Errc::invalid_argument, "characteristic vector length mismatch");
        Elem acc = f.one();
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i]) acc = f.mul(acc, f.pow(x[i], v[i]));
        out.push_back(acc);
    }
    return out;
}

PointSet affine_toric_set(const Clutter& c, const Field& f, std::uint64_t budget) {
    const auto g = torus_image(c, f, budget);
    const std::size_t s = std::size_t(c.num_edges());
    std::vector<Elem> rows(g.size() * s);
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < s; ++j) rows[i * s + j] = f.exp(g.at(i)[j]);
    g_points_enumerated += g.size();
    auto out = PointSet::from_rows(f, PointKind::affine, s, std::move(rows));
    out.mark_group();
    return out;
}

PointSet projective_toric_set(const Clutter& c, const Field& f, std::uint64_t budget) {
    const auto g = torus_image(c, f, budget);
    const std::size_t s = std::size_t(c.num_edges());
    const std::uint32_t m = f.order() - 1;
    std::vector<Elem> rows(g.size() * s);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const std::uint32_t* a = g.at(i);
        for (std::size_t j = 0; j < s; ++j) rows[i * s + j] = f.exp(a[j] + m - a[0]);
    }
    g_points_enumerated += g.size();
    auto out = PointSet::from_rows(f, PointKind::projective, s, std::move(rows));
    out.mark_group();
    return out;
}

PointSet projective_closure_points(const Clutter& c, const Field& f, std::uint64_t budget) {
    const auto g = torus_image(c, f, budget);
    const std::size_t s = std::size_t(c.num_edges());
    const std::size_t dim = s + 1;
    const std::uint32_t m = f.order() - 1;
    std::vector<Elem> rows(g.size() * dim), raw(g.size() * dim);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const std::uint32_t* a = g.at(i);
        for (std::size_t j = 0; j < s; ++j) {
            rows[i * dim + j] = f.exp(a[j] + m - a[0]);
            raw[i * dim + j] = f.exp(a[j]);
        }
        rows[i * dim + s] = f.exp(m - a[0]);
        raw[i * dim + s] = f.one();
    }
    g_points_enumerated += g.size();
    auto out = PointSet::from_rows(f, PointKind::closure, dim, std::move(rows), std::move(raw));
    out.mark_group();
    return out;
}

PointSet affine_toric_set_by_enumeration(const Clutter& c, const Field& f, std::uint64_t budget) {
    const std::uint32_t m = f.order() - 1;
    const std::size_t n = std::size_t(c.num_vertices());
    if (saturating_pow(m, n) > budget)
        throw Error(Errc::budget_exceeded, "(q-1)^n = " + std::to_string(m) + "^" + std::to_string(n) +
                                               " exceeds the enumeration budget");
    const auto vecs = characteristic_vectors(c);
    std::vector<std::uint32_t> e(n, 0);
    std::vector<Elem> x(n), rows;
    for (;;) {
        for (std::size_t i = 0; i < n; ++i) x[i] = f.exp(e[i]);
        auto p = eval_monomial_map(f, x, vecs);
        rows.insert(rows.end(), p.begin(), p.end());
        ++g_points_enumerated;
        std::size_t i = 0;
        while (i < n && ++e[i] == m) e[i++] = 0;
        if (i == n) break;
    }
    return PointSet::from_rows(f, PointKind::affine, vecs.size(), std::move(rows));
}

bool is_projective_torus(const PointSet& x) {
    if (!x.projective()) return false;
    const std::uint64_t q1 = x.field().order() - 1;
    if (x.size() != saturating_pow(q1, x.dim() - 1)) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (Elem e : x.point(i))
            if (e == 0) return false;
    return true;
}

bool is_affine_torus(const PointSet& x) {
    if (x.kind() != PointKind::affine) return false;
    const std::uint64_t q1 = x.field().order() - 1;
    if (x.size() != saturating_pow(q1, x.dim())) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (Elem e : x.point(i))
            if (e == 0) return false;
    return true;
}

std::uint64_t points_enumerated() noexcept { return g_points_enumerated.load(); }

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) noexcept {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
        r *= base;
    }
    return r;
}

}  // namespace toric
