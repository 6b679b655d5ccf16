#include "toric/linalg.hpp"

#include <algorithm>

namespace toric {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols, rows);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
}

Echelon row_reduce(const Field& f, Matrix m) {
    std::vector<std::size_t> origin(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) origin[i] = i;
    Echelon out;
    std::size_t r = 0;
    std::vector<Elem> tmp(m.cols);
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t piv = r;
        while (piv < m.rows && m.at(piv, c) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != r) {
            std::swap_ranges(m.row(piv).begin(), m.row(piv).end(), m.row(r).begin());
            std::swap(origin[piv], origin[r]);
        }
        f.scale(m.row(r), f.inv(m.at(r, c)));
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            f.axpy(m.row(i), m.row(r), f.neg(m.at(i, c)));
        }
        out.pivot_cols.push_back(c);
        out.pivot_rows.push_back(origin[r]);
        ++r;
    }
    m.a.resize(r * m.cols);
    m.rows = r;
    out.reduced = std::move(m);
    return out;
}

std::size_t rank_gf(const Field& f, Matrix m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t piv = r;
        while (piv < m.rows && m.at(piv, c) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != r) std::swap_ranges(m.row(piv).begin(), m.row(piv).end(), m.row(r).begin());
        f.scale(m.row(r), f.inv(m.at(r, c)));
        for (std::size_t i = r + 1; i < m.rows; ++i)
            if (m.at(i, c) != 0) f.axpy(m.row(i), m.row(r), f.neg(m.at(i, c)));
        ++r;
    }
    return r;
}

Matrix null_space(const Field& f, const Matrix& m) {
    Echelon e = row_reduce(f, m);
    const std::size_t n = m.cols;
    std::vector<bool> is_pivot(n, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    Matrix h(n - e.pivot_cols.size(), n);
    std::size_t row = 0;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        h.at(row, free) = 1;
        for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
            h.at(row, e.pivot_cols[i]) = f.neg(e.reduced.at(i, free));
        ++row;
    }
    return h;
}

std::optional<std::vector<Elem>> solve_left(const Field& f, const Matrix& m, std::span<const Elem> target) {
    // x m = t  <=>  m^T x^T = t^T; eliminate the augmented system [m^T | t]
    Matrix aug(m.cols, m.rows + 1);
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) aug.at(c, r) = m.at(r, c);
    for (std::size_t c = 0; c < m.cols; ++c) aug.at(c, m.rows) = target[c];
    Echelon e = row_reduce(f, std::move(aug));
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.rows) return std::nullopt;
    std::vector<Elem> x(m.rows, 0);
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) x[e.pivot_cols[i]] = e.reduced.at(i, m.rows);
    return x;
}

std::vector<Elem> vec_mat(const Field& f, std::span<const Elem> x, const Matrix& m) {
    std::vector<Elem> out(m.cols, 0);
    for (std::size_t r = 0; r < m.rows; ++r)
        if (x[r] != 0) f.axpy(out, m.row(r), x[r]);
    return out;
}

std::size_t weight(std::span<const Elem> v) noexcept {
    return std::size_t(std::count_if(v.begin(), v.end(), [](Elem e) { return e != 0; }));
}

void IncrementalBasis::reduce(std::span<Elem> v) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Elem c = v[pivot_[i]];
        if (c != 0) f_.axpy(v, basis_[i], f_.neg(c));
    }
}

bool IncrementalBasis::insert(std::vector<Elem> v) {
    if (v.size() != len_) throw Error(Errc::invalid_argument, "vector length does not match the basis");
    if (full()) return false;
    reduce(v);
    auto it = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
    if (it == v.end()) return false;
    f_.scale(v, f_.inv(*it));
    pivot_.push_back(std::size_t(it - v.begin()));
    basis_.push_back(std::move(v));
    return true;
}

bool IncrementalBasis::contains(std::span<const Elem> v) const {
    std::vector<Elem> w(v.begin(), v.end());
    reduce(w);
    return std::all_of(w.begin(), w.end(), [](Elem e) { return e == 0; });
}

}  // namespace toric
