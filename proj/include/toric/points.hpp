#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "toric/clutter.hpp"
#include "toric/field.hpp"

namespace toric {

enum class PointKind { affine, projective, closure };

std::string_view kind_name(PointKind k) noexcept;

/// Default cap on generated coordinates (points times ambient dimension).
inline constexpr std::uint64_t kDefaultPointBudget = 100'000'000;

/// Deduplicated point list with flat storage.
///
/// Projective points (kinds projective and closure) are stored in canonical
/// form with first nonzero coordinate 1. Points are sorted lexicographically
/// by element code. For the closure kind, raw() holds the (Q, 1)
/// representative of each point, aligned with points().
class PointSet {
public:
    PointSet(Field field, PointKind kind, std::size_t dim);

    const Field& field() const noexcept { return field_; }
    PointKind kind() const noexcept { return kind_; }
    bool projective() const noexcept { return kind_ != PointKind::affine; }
    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return dim_ == 0 ? 0 : coords_.size() / dim_; }

    std::span<const Elem> point(std::size_t i) const { return {coords_.data() + i * dim_, dim_}; }
    std::span<const Elem> raw(std::size_t i) const;
    bool has_raw() const noexcept { return !raw_.empty(); }

    /// Set by the toric generators: the points form a group under
    /// componentwise multiplication.
    bool is_group() const noexcept { return group_; }
    void mark_group(bool g = true) noexcept { group_ = g; }

    /// Canonicalizes (projective kinds), then inserts unless already present.
    /// Keeps the set sorted; intended for small hand-built sets.
    void insert(std::span<const Elem> p);
    bool contains(std::span<const Elem> p) const;

    /// Bulk construction: canonical rows (and matching raw rows for closure
    /// sets) are sorted and deduplicated.
    static PointSet from_rows(Field field, PointKind kind, std::size_t dim, std::vector<Elem> rows,
                              std::vector<Elem> raw_rows = {});

    friend bool operator==(const PointSet& a, const PointSet& b) {
        return a.field_ == b.field_ && a.kind_ == b.kind_ && a.dim_ == b.dim_ && a.coords_ == b.coords_;
    }

private:
    Field field_;
    PointKind kind_;
    std::size_t dim_;
    std::vector<Elem> coords_;
    std::vector<Elem> raw_;
    bool group_ = false;
};

/// Scales a projective point so its first nonzero coordinate is 1. Throws
/// Errc::zero_coordinate for the zero vector.
std::vector<Elem> canonicalize(const Field& f, std::span<const Elem> p);

/// (prod_i x_i^{v_j,i})_j; throws Errc::zero_coordinate if some x_i is 0.
std::vector<Elem> eval_monomial_map(const Field& f, std::span<const Elem> x, const std::vector<CharVec>& vectors);

/// X*, X and Y. Generated as the subgroup of the torus spanned by the images
/// of the coordinate directions, in discrete-log coordinates; throws
/// Errc::budget_exceeded when the set would exceed the coordinate budget.
PointSet affine_toric_set(const Clutter& c, const Field& f, std::uint64_t budget = kDefaultPointBudget);
PointSet projective_toric_set(const Clutter& c, const Field& f, std::uint64_t budget = kDefaultPointBudget);
PointSet projective_closure_points(const Clutter& c, const Field& f, std::uint64_t budget = kDefaultPointBudget);

/// X* by direct iteration over all (q-1)^n exponent tuples of the torus.
/// Throws Errc::budget_exceeded when (q-1)^n exceeds the budget.
PointSet affine_toric_set_by_enumeration(const Clutter& c, const Field& f, std::uint64_t budget = kDefaultPointBudget);

bool is_projective_torus(const PointSet& x);
bool is_affine_torus(const PointSet& x);

/// Total number of toric points produced by the generators above since
/// process start.
std::uint64_t points_enumerated() noexcept;

/// Integer power with saturation at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) noexcept;

}  // namespace toric
