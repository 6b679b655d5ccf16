#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "toric/error.hpp"

namespace toric {

/// Canonical integer code of a field element: the residue c_0 + c_1 x + ... +
/// c_{m-1} x^{m-1} is stored as c_0 + c_1 p + ... + c_{m-1} p^{m-1}.
/// Addition in characteristic 2 is therefore a plain XOR of codes.
using Elem = std::uint16_t;

namespace detail {

struct FieldTables {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;  // low-degree first, monic, size m + 1
    Elem beta = 0;
    std::vector<Elem> exp;               // beta^i for i in [0, 2(q-1))
    std::vector<std::uint32_t> log;      // log[0] unused
    std::vector<Elem> mul_table;         // q*q, only for small q
    std::vector<Elem> add_table;         // q*q, only for small non-prime q with p > 2
    std::vector<Elem> neg_table;
    std::vector<Elem> inv_table;
};

}  // namespace detail

/// GF(q) for a prime power q >= 3.
///
/// The reduction polynomial is the lexicographically smallest monic
/// irreducible of degree m (coefficients compared low-degree first) and the
/// primitive element is the smallest element of order q - 1 in the same
/// coefficient order, so two fields built from the same q are identical.
/// Copies share one immutable table block.
class Field {
public:
    explicit Field(std::uint32_t q);

    std::uint32_t order() const noexcept { return t_->q; }
    std::uint32_t characteristic() const noexcept { return t_->p; }
    std::uint32_t degree() const noexcept { return t_->m; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return t_->modulus; }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }
    Elem primitive() const noexcept { return t_->beta; }

    bool contains(std::uint32_t code) const noexcept { return code < t_->q; }

    Elem add(Elem a, Elem b) const noexcept {
        const auto& t = *t_;
        if (t.m == 1) {
            std::uint32_t s = std::uint32_t(a) + b;
            return Elem(s >= t.p ? s - t.p : s);
        }
        if (t.p == 2) return Elem(a ^ b);
        if (!t.add_table.empty()) return t.add_table[std::size_t(a) * t.q + b];
        return add_digits(a, b);
    }

    Elem neg(Elem a) const noexcept { return t_->neg_table[a]; }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const noexcept {
        const auto& t = *t_;
        if (!t.mul_table.empty()) return t.mul_table[std::size_t(a) * t.q + b];
        if (a == 0 || b == 0) return 0;
        return t.exp[t.log[a] + t.log[b]];
    }

    /// Throws Errc::division_by_zero for a == 0.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    /// Negative exponents are allowed for nonzero bases.
    Elem pow(Elem a, std::int64_t e) const;

    /// beta^k, k taken modulo q - 1.
    Elem exp(std::uint64_t k) const noexcept { return t_->exp[k % (t_->q - 1)]; }
    /// Discrete logarithm to base beta; requires a != 0.
    std::uint32_t log(Elem a) const;

    std::uint32_t multiplicative_order(Elem a) const;

    std::vector<std::uint32_t> coefficients(Elem a) const;
    Elem from_coefficients(std::span<const std::uint32_t> coeffs) const;
    /// Validated conversion from an integer code.
    Elem element(std::uint32_t code) const;

    /// Deterministic total order: coefficient sequences compared low-degree first.
    bool precedes(Elem a, Elem b) const noexcept { return order_key(a) < order_key(b); }
    std::uint32_t order_key(Elem a) const noexcept;

    std::string to_string(Elem a) const;

    /// dst[i] += c * src[i]
    void axpy(std::span<Elem> dst, std::span<const Elem> src, Elem c) const noexcept;
    /// v[i] *= c
    void scale(std::span<Elem> v, Elem c) const noexcept;

    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.t_ == b.t_ || a.t_->q == b.t_->q;
    }

private:
    Elem add_digits(Elem a, Elem b) const noexcept;

    std::shared_ptr<const detail::FieldTables> t_;
};

/// Element bundled with its field; arithmetic between different fields throws
/// Errc::field_mismatch.
class FieldElement {
public:
    FieldElement(Field field, Elem value);

    const Field& field() const noexcept { return field_; }
    Elem value() const noexcept { return value_; }
    std::vector<std::uint32_t> coefficients() const { return field_.coefficients(value_); }

    FieldElement inv() const { return {field_, field_.inv(value_)}; }
    FieldElement pow(std::int64_t e) const { return {field_, field_.pow(value_, e)}; }
    FieldElement operator-() const { return {field_, field_.neg(value_)}; }
    bool is_zero() const noexcept { return value_ == 0; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }

    std::string to_string() const { return field_.to_string(value_); }

private:
    Field field_;
    Elem value_;
};

/// Returns (p, m) with q = p^m, or throws Errc::not_prime_power.
std::pair<std::uint32_t, std::uint32_t> prime_power_decomposition(std::uint64_t q);

}  // namespace toric
