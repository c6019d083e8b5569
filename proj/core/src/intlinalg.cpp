#include "emext/intlinalg.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace emext {

// ---------------------------------------------------------------------------
// Matrix

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw Error(ErrorCode::dimension_mismatch, "ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

template <class T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

template <class T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw Error(ErrorCode::dimension_mismatch, "row length differs from column count");
        std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
}

template <class T>
Matrix<T> Matrix<T>::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

template <class T>
bool Matrix<T>::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return sgn(x) == 0; });
}

template <class T>
void Matrix<T>::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

template <class T>
void Matrix<T>::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw Error(ErrorCode::dimension_mismatch, "matrix product shape");
    Matrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (sgn(a(i, k)) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorCode::dimension_mismatch, "matrix sum shape");
    Matrix<T> c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
    return c;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorCode::dimension_mismatch, "matrix difference shape");
    Matrix<T> c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
    return c;
}

template <class T>
Matrix<T> operator*(const T& s, const Matrix<T>& a) {
    Matrix<T> c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
    return c;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& v) {
    if (a.cols() != v.size()) throw Error(ErrorCode::dimension_mismatch, "matrix-vector shape");
    std::vector<T> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
    return out;
}

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (sgn(a(i, j)) == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return c;
}

template class Matrix<Int>;
template class Matrix<Rat>;
template IntMatrix operator*(const IntMatrix&, const IntMatrix&);
template RatMatrix operator*(const RatMatrix&, const RatMatrix&);
template IntMatrix operator+(const IntMatrix&, const IntMatrix&);
template RatMatrix operator+(const RatMatrix&, const RatMatrix&);
template IntMatrix operator-(const IntMatrix&, const IntMatrix&);
template RatMatrix operator-(const RatMatrix&, const RatMatrix&);
template IntMatrix operator*(const Int&, const IntMatrix&);
template RatMatrix operator*(const Rat&, const RatMatrix&);
template std::vector<Int> operator*(const IntMatrix&, const std::vector<Int>&);
template std::vector<Rat> operator*(const RatMatrix&, const std::vector<Rat>&);
template IntMatrix kron(const IntMatrix&, const IntMatrix&);
template RatMatrix kron(const RatMatrix&, const RatMatrix&);

namespace {

template <class T>
std::ostream& print_matrix(std::ostream& os, const Matrix<T>& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
        os << ']';
    }
    return os << ']';
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return print_matrix(os, m); }
std::ostream& operator<<(std::ostream& os, const RatMatrix& m) { return print_matrix(os, m); }

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
    return r;
}

// ---------------------------------------------------------------------------
// Smith normal form

std::size_t SmithForm::rank() const {
    return static_cast<std::size_t>(
        std::count_if(d.begin(), d.end(), [](const Int& x) { return sgn(x) != 0; }));
}

namespace {

// row_i -= q * row_k on both the working matrix and the left transform
void row_axpy(IntMatrix& a, std::size_t i, std::size_t k, const Int& q) {
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (sgn(a(k, j)) != 0) a(i, j) -= q * a(k, j);
}

void col_axpy(IntMatrix& a, std::size_t j, std::size_t k, const Int& q) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (sgn(a(i, k)) != 0) a(i, j) -= q * a(i, k);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
    const std::size_t m = input.rows();
    const std::size_t n = input.cols();
    IntMatrix a = input;
    IntMatrix u = IntMatrix::identity(m);
    IntMatrix v = IntMatrix::identity(n);
    const std::size_t steps = std::min(m, n);
    std::vector<Int> d(steps);

    for (std::size_t t = 0; t < steps; ++t) {
        bool empty = false;
        for (;;) {
            // smallest nonzero |entry| in the active block, first in row-major order
            std::size_t pr = m, pc = n;
            Int best;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (sgn(a(i, j)) == 0) continue;
                    if (pr == m || mpz_cmpabs(a(i, j).get_mpz_t(), best.get_mpz_t()) < 0) {
                        best = abs(a(i, j));
                        pr = i;
                        pc = j;
                    }
                }
            if (pr == m) {
                empty = true;
                break;
            }
            a.swap_rows(t, pr);
            u.swap_rows(t, pr);
            a.swap_cols(t, pc);
            v.swap_cols(t, pc);

            bool dirty = false;
            Int q;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (sgn(a(i, t)) == 0) continue;
                mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                row_axpy(a, i, t, q);
                row_axpy(u, i, t, q);
                if (sgn(a(i, t)) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (sgn(a(t, j)) == 0) continue;
                mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                col_axpy(a, j, t, q);
                col_axpy(v, j, t, q);
                if (sgn(a(t, j)) != 0) dirty = true;
            }
            if (dirty) continue;

            // divisibility: fold an offending row into the pivot row and retry
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad == m) break;
            row_axpy(a, t, bad, Int(-1));
            row_axpy(u, t, bad, Int(-1));
        }
        if (empty) break;
        if (sgn(a(t, t)) < 0) {
            for (std::size_t j = 0; j < n; ++j) a(t, j) = -a(t, j);
            for (std::size_t j = 0; j < m; ++j) u(t, j) = -u(t, j);
        }
        d[t] = a(t, t);
    }
    return {std::move(d), std::move(u), std::move(v)};
}

Int determinant(const IntMatrix& input) {
    if (input.rows() != input.cols())
        throw Error(ErrorCode::dimension_mismatch, "determinant of a non-square matrix");
    const std::size_t n = input.rows();
    if (n == 0) return 1;
    IntMatrix a = input;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(a(p, k)) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Lattices

LatticeSubgroup::LatticeSubgroup(std::size_t ambient, IntMatrix gens)
    : ambient_rank(ambient), generators(std::move(gens)) {
    if (generators.rows() == 0) generators = IntMatrix(0, ambient);
    if (generators.cols() != ambient)
        throw Error(ErrorCode::dimension_mismatch, "generator length differs from ambient rank");
}

LatticeSubgroup LatticeSubgroup::from_vectors(std::size_t ambient,
                                              const std::vector<std::vector<Int>>& gens) {
    return LatticeSubgroup(ambient, IntMatrix::from_rows(gens, ambient));
}

QuotientGroup::QuotientGroup(std::vector<Int> invariant_factors, IntMatrix projection)
    : factors_(std::move(invariant_factors)), projection_(std::move(projection)) {
    if (factors_.size() != projection_.rows())
        throw Error(ErrorCode::dimension_mismatch, "one projection row per invariant factor");
}

std::vector<Int> QuotientGroup::coset(std::span<const Int> v) const {
    if (v.size() != ambient_rank())
        throw Error(ErrorCode::dimension_mismatch, "coset: vector length differs from ambient rank");
    std::vector<Int> out(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += projection_(i, j) * v[j];
        if (sgn(factors_[i]) > 0) mpz_fdiv_r(out[i].get_mpz_t(), out[i].get_mpz_t(), factors_[i].get_mpz_t());
    }
    return out;
}

std::vector<Int> QuotientGroup::coset(std::span<const long> v) const {
    std::vector<Int> w(v.begin(), v.end());
    return coset(std::span<const Int>(w));
}

bool QuotientGroup::is_finite() const {
    return std::none_of(factors_.begin(), factors_.end(), [](const Int& d) { return sgn(d) == 0; });
}

Int QuotientGroup::order() const {
    if (!is_finite()) throw Error(ErrorCode::nonfinite, "quotient has a free factor");
    Int o = 1;
    for (const auto& d : factors_) o *= d;
    return o;
}

std::vector<Int> QuotientGroup::nontrivial_factors() const {
    std::vector<Int> out;
    for (const auto& d : factors_)
        if (d != 1) out.push_back(d);
    std::stable_partition(out.begin(), out.end(), [](const Int& d) { return sgn(d) != 0; });
    return out;
}

std::vector<std::vector<Int>> QuotientGroup::elements() const {
    if (!is_finite()) throw Error(ErrorCode::nonfinite, "quotient has a free factor");
    std::vector<std::vector<Int>> out{std::vector<Int>(factors_.size())};
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] == 1) continue;
        std::vector<std::vector<Int>> next;
        for (const auto& e : out)
            for (Int k = 0; k < factors_[i]; ++k) {
                next.push_back(e);
                next.back()[i] = k;
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Int> QuotientGroup::zero() const { return std::vector<Int>(factors_.size()); }

namespace {

// a unit u of Z/d with u*e = gcd(e, d) mod d
Int normalizing_unit(const Int& e, const Int& d) {
    Int g = gcd(e, d);
    Int dg = d / g;
    Int eg = e / g;
    mpz_fdiv_r(eg.get_mpz_t(), eg.get_mpz_t(), dg.get_mpz_t());
    Int u0 = 1;
    if (dg > 1) mpz_invert(u0.get_mpz_t(), eg.get_mpz_t(), dg.get_mpz_t());
    for (Int u = u0;; u += dg)
        if (gcd(u, d) == 1) return u;
}

}  // namespace

QuotientGroup quotient_of(const LatticeSubgroup& sub) {
    const std::size_t n = sub.ambient_rank;
    SmithForm s = smith_normal_form(sub.generators.transpose());  // n x k
    std::vector<Int> factors(n);
    for (std::size_t i = 0; i < s.d.size(); ++i) factors[i] = s.d[i];

    IntMatrix proj = s.u;
    for (std::size_t i = 0; i < n; ++i) {
        const Int& d = factors[i];
        if (d == 1) {
            for (std::size_t j = 0; j < n; ++j) proj(i, j) = 0;
            continue;
        }
        if (sgn(d) == 0) {
            // free coordinate: first nonzero entry positive
            for (std::size_t j = 0; j < n; ++j)
                if (sgn(proj(i, j)) != 0) {
                    if (sgn(proj(i, j)) < 0)
                        for (std::size_t l = 0; l < n; ++l) proj(i, l) = -proj(i, l);
                    break;
                }
            continue;
        }
        for (std::size_t j = 0; j < n; ++j)
            mpz_fdiv_r(proj(i, j).get_mpz_t(), proj(i, j).get_mpz_t(), d.get_mpz_t());
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(proj(i, j)) != 0) {
                Int unit = normalizing_unit(proj(i, j), d);
                for (std::size_t l = 0; l < n; ++l) {
                    proj(i, l) *= unit;
                    mpz_fdiv_r(proj(i, l).get_mpz_t(), proj(i, l).get_mpz_t(), d.get_mpz_t());
                }
                break;
            }
    }
    return QuotientGroup(std::move(factors), std::move(proj));
}

bool lattice_contains(const LatticeSubgroup& sub, std::span<const Int> v) {
    if (v.size() != sub.ambient_rank)
        throw Error(ErrorCode::dimension_mismatch, "lattice_contains: vector length differs from ambient rank");
    const std::size_t n = sub.ambient_rank;
    SmithForm s = smith_normal_form(sub.generators.transpose());
    for (std::size_t i = 0; i < n; ++i) {
        Int w = 0;
        for (std::size_t j = 0; j < n; ++j) w += s.u(i, j) * v[j];
        const Int d = i < s.d.size() ? s.d[i] : Int(0);
        if (sgn(d) == 0) {
            if (sgn(w) != 0) return false;
        } else if (!mpz_divisible_p(w.get_mpz_t(), d.get_mpz_t())) {
            return false;
        }
    }
    return true;
}

bool lattice_contains(const LatticeSubgroup& sub, std::span<const long> v) {
    std::vector<Int> w(v.begin(), v.end());
    return lattice_contains(sub, std::span<const Int>(w));
}

// ---------------------------------------------------------------------------
// Rational ranks

std::vector<Int> primitive_integer_vector(std::span<const Rat> v) {
    Int l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Int> out(v.size());
    Int g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = v[i].get_num() * (l / v[i].get_den());
        g = gcd(g, out[i]);
    }
    if (sgn(g) != 0 && g != 1)
        for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return out;
}

std::size_t rational_rank(const RatMatrix& input) {
    const std::size_t m = input.rows();
    const std::size_t n = input.cols();
    IntMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        auto r = primitive_integer_vector(input.row(i));
        std::copy(r.begin(), r.end(), a.row(i).begin());
    }
    // Bareiss elimination with column skipping
    Int prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < m; ++c) {
        std::size_t p = rank;
        while (p < m && sgn(a(p, c)) == 0) ++p;
        if (p == m) continue;
        a.swap_rows(rank, p);
        for (std::size_t i = rank + 1; i < m; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                a(i, j) = a(i, j) * a(rank, c) - a(i, c) * a(rank, j);
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            a(i, c) = 0;
        }
        prev = a(rank, c);
        ++rank;
    }
    return rank;
}

std::size_t rational_image_dim(const RatMatrix& a) { return rational_rank(a); }
std::size_t rational_kernel_dim(const RatMatrix& a) { return a.cols() - rational_rank(a); }

namespace {

// reduced row echelon form in place; returns pivot columns
std::vector<std::size_t> rref(RatMatrix& a) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(r, p);
        Rat inv = 1 / a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || sgn(a(i, c)) == 0) continue;
            Rat f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::vector<std::vector<Rat>> rational_nullspace(const RatMatrix& input) {
    RatMatrix a = input;
    auto pivots = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> x(a.cols());
        x[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -a(r, f);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<std::vector<Rat>> rational_solve(const RatMatrix& a, std::span<const Rat> b) {
    if (b.size() != a.rows()) throw Error(ErrorCode::dimension_mismatch, "rational_solve: rhs length");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<Rat> x(a.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
    return x;
}

RatMatrix rational_inverse(const RatMatrix& a) {
    if (a.rows() != a.cols()) throw Error(ErrorCode::dimension_mismatch, "inverse of a non-square matrix");
    const std::size_t n = a.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1)
        throw Error(ErrorCode::invalid_input, "matrix is singular");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

// ---------------------------------------------------------------------------
// SparseEchelon

namespace {

void make_primitive(SparseEchelon::Row& row) {
    Int g = 0;
    for (const auto& [c, x] : row) {
        g = gcd(g, x);
        if (g == 1) break;
    }
    if (g != 1)
        for (auto& [c, x] : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    if (sgn(row.front().second) < 0)
        for (auto& [c, x] : row) x = -x;
}

// a*row - b*piv, merging sorted column lists and dropping zeros
SparseEchelon::Row combine(const Int& a, const SparseEchelon::Row& row, const Int& b,
                           const SparseEchelon::Row& piv) {
    SparseEchelon::Row out;
    out.reserve(row.size() + piv.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < piv.size()) {
        if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
            out.emplace_back(row[i].first, a * row[i].second);
            ++i;
        } else if (i == row.size() || piv[j].first < row[i].first) {
            out.emplace_back(piv[j].first, -b * piv[j].second);
            ++j;
        } else {
            Int v = a * row[i].second - b * piv[j].second;
            if (sgn(v) != 0) out.emplace_back(row[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

bool SparseEchelon::insert(Row row) {
    std::erase_if(row, [](const Entry& e) { return sgn(e.second) == 0; });
    std::sort(row.begin(), row.end(), [](const Entry& x, const Entry& y) { return x.first < y.first; });
    for (std::size_t k = 1; k < row.size(); ++k)
        if (row[k].first == row[k - 1].first)
            throw Error(ErrorCode::invalid_input, "sparse row has a repeated column");
    while (!row.empty()) {
        const std::size_t lead = row.front().first;
        if (lead >= pivots_.size()) throw Error(ErrorCode::dimension_mismatch, "sparse column out of range");
        if (pivots_[lead] == npos) {
            make_primitive(row);
            pivots_[lead] = rows_.size();
            rows_.push_back(std::move(row));
            return true;
        }
        const Row& piv = rows_[pivots_[lead]];
        Int g = gcd(row.front().second, piv.front().second);
        Int a = piv.front().second / g;
        Int b = row.front().second / g;
        row = combine(a, row, b, piv);
        if (!row.empty()) make_primitive(row);
    }
    return false;
}

bool SparseEchelon::insert_rational(std::span<const std::pair<std::size_t, Rat>> row) {
    std::vector<Rat> vals;
    vals.reserve(row.size());
    for (const auto& e : row) vals.push_back(e.second);
    auto ints = primitive_integer_vector(vals);
    Row r;
    r.reserve(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) r.emplace_back(row[i].first, std::move(ints[i]));
    return insert(std::move(r));
}

}  // namespace emext
