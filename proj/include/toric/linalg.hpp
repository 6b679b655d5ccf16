#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "toric/field.hpp"

namespace toric {

/// Dense row-major matrix of field codes.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Elem> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    Elem& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    Elem at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
    std::span<Elem> row(std::size_t r) { return {a.data() + r * cols, cols}; }
    std::span<const Elem> row(std::size_t r) const { return {a.data() + r * cols, cols}; }

    static Matrix identity(std::size_t n);
    Matrix transposed() const;
    friend bool operator==(const Matrix&, const Matrix&) = default;
};

struct Echelon {
    Matrix reduced;                // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivot_cols;
    std::vector<std::size_t> pivot_rows;  // original rows that produced each pivot, in scan order
};

/// Gauss-Jordan elimination; pivot in each column is the first nonzero entry
/// below the current row.
Echelon row_reduce(const Field& f, Matrix m);
std::size_t rank_gf(const Field& f, Matrix m);

/// A k x n matrix whose rows span the null space of x -> m x (so m * h^T = 0).
Matrix null_space(const Field& f, const Matrix& m);

/// Some x with x * m = target, or nothing if target is not in the row space.
std::optional<std::vector<Elem>> solve_left(const Field& f, const Matrix& m, std::span<const Elem> target);

std::vector<Elem> vec_mat(const Field& f, std::span<const Elem> x, const Matrix& m);

std::size_t weight(std::span<const Elem> v) noexcept;

/// Semi-echelon basis grown one vector at a time.
class IncrementalBasis {
public:
    IncrementalBasis(Field f, std::size_t length) : f_(std::move(f)), len_(length) {}

    /// Reduces v against the basis in place; returns true and keeps it when a
    /// nonzero remainder is left.
    bool insert(std::vector<Elem> v);
    /// Reduces a copy and reports whether it is already in the span.
    bool contains(std::span<const Elem> v) const;

    std::size_t rank() const noexcept { return basis_.size(); }
    std::size_t length() const noexcept { return len_; }
    bool full() const noexcept { return basis_.size() == len_; }

private:
    void reduce(std::span<Elem> v) const;

    Field f_;
    std::size_t len_;
    std::vector<std::vector<Elem>> basis_;  // pivot entry normalized to 1
    std::vector<std::size_t> pivot_;
};

}  // namespace toric
