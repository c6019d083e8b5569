#pragma once

// Exact integer and rational linear algebra: dense matrices over Z and Q,
// Smith normal form with unimodular transforms, sublattices of Z^n and their
// quotients, and fraction-free rank computations.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "emext/error.hpp"

namespace emext {

using Int = mpz_class;
using Rat = mpq_class;

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    Matrix transpose() const;
    bool is_zero() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b);
template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b);
template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b);
template <class T>
Matrix<T> operator*(const T& s, const Matrix<T>& a);
template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& v);

/// Kronecker product a (x) b.
template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);
std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

RatMatrix to_rational(const IntMatrix& m);

/// U * A * V = diag(d), |det U| = |det V| = 1, d[i] | d[i+1], d[i] >= 0.
/// d has min(rows, cols) entries; trailing zeros encode rank deficiency.
struct SmithForm {
    std::vector<Int> d;
    IntMatrix u;
    IntMatrix v;

    std::size_t rank() const;
};

/// Pivot = smallest nonzero absolute value in the active block, ties broken in
/// row-major order; deterministic for a given input.
SmithForm smith_normal_form(const IntMatrix& a);

/// Determinant by fraction-free elimination.
Int determinant(const IntMatrix& a);

/// Subgroup of Z^ambient_rank generated by the rows of `generators`.
struct LatticeSubgroup {
    std::size_t ambient_rank = 0;
    IntMatrix generators;  // k x ambient_rank

    LatticeSubgroup() = default;
    LatticeSubgroup(std::size_t ambient, IntMatrix gens);
    static LatticeSubgroup from_vectors(std::size_t ambient, const std::vector<std::vector<Int>>& gens);
};

/// Z^n / <generators>. Coset coordinates are projection * v with coordinate i
/// reduced into [0, d_i) when d_i > 0 and left unreduced when d_i = 0.
class QuotientGroup {
public:
    QuotientGroup() = default;
    QuotientGroup(std::vector<Int> invariant_factors, IntMatrix projection);

    const std::vector<Int>& invariant_factors() const noexcept { return factors_; }
    const IntMatrix& projection() const noexcept { return projection_; }
    std::size_t ambient_rank() const noexcept { return projection_.cols(); }

    std::vector<Int> coset(std::span<const Int> v) const;
    std::vector<Int> coset(std::span<const long> v) const;

    bool is_finite() const;
    /// Group order; throws nonfinite when a free factor is present.
    Int order() const;
    /// Factors > 1 in ascending order (the torsion part; free factors print as 0).
    std::vector<Int> nontrivial_factors() const;
    /// All canonical coset vectors, lexicographic. Throws nonfinite.
    std::vector<std::vector<Int>> elements() const;

    /// Canonical coordinates of the zero coset.
    std::vector<Int> zero() const;

private:
    std::vector<Int> factors_;
    IntMatrix projection_;
};

QuotientGroup quotient_of(const LatticeSubgroup& sub);

/// True iff v is an integer combination of the generators.
bool lattice_contains(const LatticeSubgroup& sub, std::span<const Int> v);
bool lattice_contains(const LatticeSubgroup& sub, std::span<const long> v);

/// Exact rank over Q (Bareiss on row-scaled integer rows).
std::size_t rational_rank(const RatMatrix& a);
std::size_t rational_kernel_dim(const RatMatrix& a);
std::size_t rational_image_dim(const RatMatrix& a);

/// Basis of {x : a x = 0}, one vector per free column, in column order.
std::vector<std::vector<Rat>> rational_nullspace(const RatMatrix& a);

/// Solves a x = b exactly; nullopt when inconsistent. Picks free variables = 0.
std::optional<std::vector<Rat>> rational_solve(const RatMatrix& a, std::span<const Rat> b);

/// Inverse of a square nonsingular rational matrix.
RatMatrix rational_inverse(const RatMatrix& a);

/// Multiplies a rational vector by the lcm of its denominators and divides by
/// the gcd of the resulting numerators. The zero vector maps to itself.
std::vector<Int> primitive_integer_vector(std::span<const Rat> v);

/// Incremental fraction-free row echelon form over Z for sparse rows.
/// Rows are inserted one at a time and reduced against the stored pivots;
/// every stored row is primitive (content 1) with a positive leading entry.
class SparseEchelon {
public:
    using Entry = std::pair<std::size_t, Int>;  // (column, value), columns ascending
    using Row = std::vector<Entry>;

    explicit SparseEchelon(std::size_t cols) : pivots_(cols, npos) {}

    /// Returns true when the row was independent of the stored rows.
    bool insert(Row row);
    bool insert_rational(std::span<const std::pair<std::size_t, Rat>> row);

    std::size_t rank() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return pivots_.size(); }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<Row> rows_;
    std::vector<std::size_t> pivots_;  // column -> index into rows_
};

}  // namespace emext
