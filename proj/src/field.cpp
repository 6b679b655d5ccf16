#include "toric/field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace toric {

std::string_view errc_name(Errc code) {
    switch (code) {
        case Errc::not_prime_power: return "NotPrimePower";
        case Errc::field_too_small: return "FieldTooSmall";
        case Errc::division_by_zero: return "DivisionByZero";
        case Errc::field_mismatch: return "FieldMismatch";
        case Errc::invalid_argument: return "InvalidArgument";
        case Errc::clutter_axiom_violation: return "ClutterAxiomViolation";
        case Errc::not_a_graph: return "NotAGraph";
        case Errc::not_connected: return "NotConnected";
        case Errc::not_connected_bipartite: return "NotConnectedBipartite";
        case Errc::no_free_vertex: return "NoFreeVertex";
        case Errc::zero_coordinate: return "ZeroCoordinate";
        case Errc::budget_exceeded: return "BudgetExceeded";
        case Errc::size_limit: return "SizeLimit";
        case Errc::invalid_degree: return "InvalidDegree";
        case Errc::parse_error: return "ParseError";
        case Errc::inconsistent_theorems: return "InconsistentTheorems";
    }
    return "Unknown";
}

namespace {

using Poly = std::vector<std::uint32_t>;  // low-degree first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // p is prime: a^(p-2)
    std::uint64_t r = 1, b = a % p;
    for (std::uint32_t e = p - 2; e; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return std::uint32_t(r);
}

// Remainder of a modulo b over GF(p); b nonzero.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint32_t lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t f = std::uint64_t(a.back()) * lead_inv % p;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = std::uint32_t((a[shift + i] + (p - f) * b[i]) % p);
        }
        trim(a);
    }
    return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t m = f.size() - 1;
    // trial division by every monic polynomial of degree 1..m/2
    for (std::size_t d = 1; d <= m / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly g(d + 1, 0);
            g[d] = 1;
            std::uint64_t v = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = std::uint32_t(v % p);
                v /= p;
            }
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

Poly smallest_irreducible(std::uint32_t p, std::uint32_t m) {
    // Enumerate monic (c_0, ..., c_{m-1}, 1) with c_0 as the most significant
    // digit, which is lexicographic order on the low-degree-first sequence.
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly f(m + 1, 0);
        f[m] = 1;
        std::uint64_t v = idx;
        for (std::uint32_t i = 0; i < m; ++i) {
            f[m - 1 - i] = std::uint32_t(v % p);
            v /= p;
        }
        if (m == 1 || is_irreducible(f, p)) return f;
    }
    throw Error(Errc::invalid_argument, "no irreducible polynomial found");
}

struct RawArith {
    std::uint32_t p, m, q;
    Poly modulus;

    Poly digits(std::uint32_t code) const {
        Poly c(m);
        for (std::uint32_t i = 0; i < m; ++i) {
            c[i] = code % p;
            code /= p;
        }
        return c;
    }
    std::uint32_t code(const Poly& c) const {
        std::uint32_t v = 0;
        for (std::uint32_t i = m; i-- > 0;) v = v * p + (i < c.size() ? c[i] : 0);
        return v;
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (m == 1) return std::uint32_t(std::uint64_t(a) * b % p);
        Poly x = digits(a), y = digits(b), r(2 * m - 1, 0);
        for (std::uint32_t i = 0; i < m; ++i)
            for (std::uint32_t j = 0; j < m; ++j)
                r[i + j] = std::uint32_t((r[i + j] + std::uint64_t(x[i]) * y[j]) % p);
        return code(poly_mod(r, modulus, p));
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
};

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

std::pair<std::uint32_t, std::uint32_t> prime_power_decomposition(std::uint64_t q) {
    if (q < 2) throw Error(Errc::not_prime_power, "q = " + std::to_string(q) + " is not a prime power");
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return {std::uint32_t(q), 1};
    std::uint64_t v = q;
    std::uint32_t m = 0;
    while (v % p == 0) {
        v /= p;
        ++m;
    }
    if (v != 1) throw Error(Errc::not_prime_power, "q = " + std::to_string(q) + " is not a prime power");
    return {std::uint32_t(p), m};
}

Field::Field(std::uint32_t q) {
    auto [p, m] = prime_power_decomposition(q);
    if (q < 3) throw Error(Errc::field_too_small, "q = " + std::to_string(q) + " is too small (q >= 3 required)");
    if (q > 65536) throw Error(Errc::size_limit, "q = " + std::to_string(q) + " exceeds the supported field size");

    auto t = std::make_shared<detail::FieldTables>();
    t->p = p;
    t->m = m;
    t->q = q;
    t->modulus = smallest_irreducible(p, m);
    RawArith raw{p, m, q, t->modulus};

    std::vector<std::uint32_t> codes(q);
    std::iota(codes.begin(), codes.end(), 0u);
    auto key = [&](std::uint32_t c) {
        std::uint32_t k = 0;
        for (std::uint32_t i = 0; i < m; ++i) {
            k = k * p + c % p;
            c /= p;
        }
        return k;
    };
    std::sort(codes.begin(), codes.end(), [&](auto a, auto b) { return key(a) < key(b); });

    const auto factors = prime_factors(q - 1);
    bool found = false;
    for (std::uint32_t c : codes) {
        if (c == 0) continue;
        bool primitive = raw.pow(c, q - 1) == 1;
        for (std::uint32_t r : factors) {
            if (!primitive) break;
            primitive = raw.pow(c, (q - 1) / r) != 1;
        }
        if (primitive) {
            t->beta = Elem(c);
            found = true;
            break;
        }
    }
    if (!found) throw Error(Errc::invalid_argument, "no primitive element found");

    t->exp.resize(2 * std::size_t(q - 1));
    t->log.assign(q, 0);
    std::uint32_t cur = 1;
    for (std::uint32_t i = 0; i < q - 1; ++i) {
        t->exp[i] = Elem(cur);
        t->exp[i + q - 1] = Elem(cur);
        t->log[cur] = i;
        cur = raw.mul(cur, t->beta);
    }

    t->neg_table.resize(q);
    t->inv_table.assign(q, 0);
    for (std::uint32_t c = 0; c < q; ++c) {
        Poly d = raw.digits(c);
        for (auto& x : d) x = (p - x) % p;
        t->neg_table[c] = Elem(raw.code(d));
        if (c != 0) t->inv_table[c] = t->exp[(q - 1 - t->log[c]) % (q - 1)];
    }

    if (q <= 256) {
        t->mul_table.resize(std::size_t(q) * q);
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b)
                t->mul_table[std::size_t(a) * q + b] =
                    (a == 0 || b == 0) ? Elem(0) : t->exp[t->log[a] + t->log[b]];
    }
    if (m > 1 && p > 2 && q <= 1024) {
        t->add_table.resize(std::size_t(q) * q);
        for (std::uint32_t a = 0; a < q; ++a) {
            Poly x = raw.digits(a);
            for (std::uint32_t b = 0; b < q; ++b) {
                Poly y = raw.digits(b);
                for (std::uint32_t i = 0; i < m; ++i) y[i] = (x[i] + y[i]) % p;
                t->add_table[std::size_t(a) * q + b] = Elem(raw.code(y));
            }
        }
    }
    t_ = std::move(t);
}

Elem Field::add_digits(Elem a, Elem b) const noexcept {
    const auto& t = *t_;
    std::uint32_t r = 0, scale = 1, x = a, y = b;
    for (std::uint32_t i = 0; i < t.m; ++i) {
        r += ((x % t.p + y % t.p) % t.p) * scale;
        x /= t.p;
        y /= t.p;
        scale *= t.p;
    }
    return Elem(r);
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw Error(Errc::division_by_zero, "inverse of zero");
    return t_->inv_table[a];
}

Elem Field::pow(Elem a, std::int64_t e) const {
    if (a == 0) {
        if (e < 0) throw Error(Errc::division_by_zero, "negative power of zero");
        return e == 0 ? Elem(1) : Elem(0);
    }
    const std::int64_t n = t_->q - 1;
    std::int64_t k = (std::int64_t(t_->log[a]) * (e % n)) % n;
    if (k < 0) k += n;
    return t_->exp[std::size_t(k)];
}

std::uint32_t Field::log(Elem a) const {
    if (a == 0 || a >= t_->q) throw Error(Errc::invalid_argument, "logarithm of zero or foreign code");
    return t_->log[a];
}

std::uint32_t Field::multiplicative_order(Elem a) const {
    if (a == 0) throw Error(Errc::invalid_argument, "zero has no multiplicative order");
    const std::uint32_t n = t_->q - 1;
    return n / std::gcd(n, t_->log[a]);
}

std::vector<std::uint32_t> Field::coefficients(Elem a) const {
    std::vector<std::uint32_t> c(t_->m);
    std::uint32_t v = a;
    for (auto& x : c) {
        x = v % t_->p;
        v /= t_->p;
    }
    return c;
}

Elem Field::from_coefficients(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() > t_->m) throw Error(Errc::invalid_argument, "too many coefficients");
    std::uint32_t v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] >= t_->p) throw Error(Errc::invalid_argument, "coefficient out of range");
        v = v * t_->p + coeffs[i];
    }
    return Elem(v);
}

Elem Field::element(std::uint32_t code) const {
    if (code >= t_->q)
        throw Error(Errc::invalid_argument,
                    "element code " + std::to_string(code) + " outside GF(" + std::to_string(t_->q) + ")");
    return Elem(code);
}

std::uint32_t Field::order_key(Elem a) const noexcept {
    std::uint32_t k = 0, c = a;
    for (std::uint32_t i = 0; i < t_->m; ++i) {
        k = k * t_->p + c % t_->p;
        c /= t_->p;
    }
    return k;
}

std::string Field::to_string(Elem a) const {
    if (t_->m == 1) return std::to_string(a);
    const auto c = coefficients(a);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0 || c[i] != 1) os << c[i];
        if (i >= 1) os << 'x';
        if (i >= 2) os << '^' << i;
    }
    if (first) os << '0';
    return os.str();
}

void Field::axpy(std::span<Elem> dst, std::span<const Elem> src, Elem c) const noexcept {
    if (c == 0) return;
    const auto& t = *t_;
    const std::size_t n = dst.size();
    if (!t.mul_table.empty()) {
        const Elem* row = &t.mul_table[std::size_t(c) * t.q];
        if (t.m == 1) {
            const Elem p = Elem(t.p);
            for (std::size_t i = 0; i < n; ++i) {
                Elem s = Elem(dst[i] + row[src[i]]);
                dst[i] = s >= p ? Elem(s - p) : s;
            }
            return;
        }
        if (t.p == 2) {
            for (std::size_t i = 0; i < n; ++i) dst[i] ^= row[src[i]];
            return;
        }
        for (std::size_t i = 0; i < n; ++i) dst[i] = add(dst[i], row[src[i]]);
        return;
    }
    for (std::size_t i = 0; i < n; ++i) dst[i] = add(dst[i], mul(c, src[i]));
}

void Field::scale(std::span<Elem> v, Elem c) const noexcept {
    for (auto& x : v) x = mul(x, c);
}

FieldElement::FieldElement(Field field, Elem value) : field_(std::move(field)), value_(value) {
    if (!field_.contains(value_))
        throw Error(Errc::invalid_argument, "element code outside field");
}

namespace {
void require_same(const FieldElement& a, const FieldElement& b) {
    if (!(a.field() == b.field()))
        throw Error(Errc::field_mismatch, "operands belong to GF(" + std::to_string(a.field().order()) +
                                              ") and GF(" + std::to_string(b.field().order()) + ")");
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return {a.field_, a.field_.add(a.value_, b.value_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return {a.field_, a.field_.sub(a.value_, b.value_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return {a.field_, a.field_.mul(a.value_, b.value_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return {a.field_, a.field_.div(a.value_, b.value_)};
}

}  // namespace toric
