#pragma once

#include <cstdint>
#include <vector>

#include "toric/linalg.hpp"
#include "toric/points.hpp"

namespace toric {

/// Exponent vector; total degree is the sum of entries.
using Monomial = std::vector<std::uint32_t>;

std::uint32_t total_degree(const Monomial& m) noexcept;

/// All monomials of degree d in num_vars variables, lexicographically
/// descending on exponents (t1^2, t1 t2, t2^2, ...).
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, std::uint32_t d);
/// Degrees 0..d concatenated in that order.
std::vector<Monomial> monomials_up_to_degree(std::size_t num_vars, std::uint32_t d);

/// C(n, k) saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

/// Value of t^m at p.
Elem eval_monomial(const Field& f, std::span<const Elem> p, const Monomial& m);

/// Rows indexed by points (stored representatives), columns by monomials.
Matrix eval_matrix(const PointSet& x, const std::vector<Monomial>& monomials);

/// Matrices beyond this many entries are refused with Errc::size_limit.
inline constexpr std::uint64_t kDefaultMatrixEntries = 10'000'000;

struct HilbertProfile {
    std::vector<std::uint64_t> H;  // H(0..regularity)
    std::vector<std::int64_t> h;   // first differences, h[0] = H(0)
    std::uint64_t degree = 0;
    std::uint32_t regularity = 0;

    std::uint64_t at(std::uint32_t d) const noexcept { return d < H.size() ? H[d] : degree; }
    friend bool operator==(const HilbertProfile&, const HilbertProfile&) = default;
};

/// Hilbert function of the vanishing ideal: for projective kinds the
/// dimension of forms of degree d restricted to the points, for the affine
/// kind the dimension of polynomials of degree <= d.
///
/// Computed as a matrix rank over distinct evaluation columns. When some
/// coordinate is nonzero at every point the degree-d columns contain the
/// degree-(d-1) columns (after rescaling rows), so each degree only adds the
/// new products of the previous frontier with a variable.
std::uint64_t hilbert_function(const PointSet& x, std::uint32_t d, std::uint64_t max_entries = kDefaultMatrixEntries);
HilbertProfile hilbert_profile(const PointSet& x, std::uint64_t max_entries = kDefaultMatrixEntries);

/// Builds a profile from H values that already reached the degree.
HilbertProfile profile_from_values(std::vector<std::uint64_t> H);

/// Convolution of the h-vector of X with (1, ..., 1) of length q - 1.
std::vector<std::int64_t> convolve_with_ones(const std::vector<std::int64_t>& h, std::uint32_t length);

/// True iff h(Y) equals h(X) convolved with the all-ones vector of length q-1.
bool series_factorization_check(const HilbertProfile& x, const HilbertProfile& y, std::uint32_t q);
bool series_factorization_check(const PointSet& x, const PointSet& y);

}  // namespace toric
