#pragma once

// Brute-force Lie algebra cohomology over Q: H^1 as derivations modulo inner
// derivations for explicit finite-dimensional algebras and modules.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "emext/chars.hpp"
#include "emext/intlinalg.hpp"

namespace emext {

using SparseVec = std::vector<std::pair<std::size_t, Rat>>;  // indices ascending, no zeros

class FinDimLie {
public:
    FinDimLie() = default;
    explicit FinDimLie(std::size_t dim, std::vector<std::string> labels = {});

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    /// Sets [e_i, e_j] = v and [e_j, e_i] = -v.
    void set_bracket(std::size_t i, std::size_t j, SparseVec v);
    const SparseVec& bracket(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
    std::vector<Rat> bracket(const std::vector<Rat>& x, const std::vector<Rat>& y) const;

    /// Exact antisymmetry and Jacobi check; throws Error(inconsistent).
    void check() const;

private:
    std::size_t dim_ = 0;
    std::vector<std::string> labels_;
    std::vector<SparseVec> table_;
};

struct FinModule {
    std::size_t dim = 0;
    std::vector<RatMatrix> action;  // one dim x dim matrix per basis element of L

    /// action([x, y]) = [action(x), action(y)] for all basis pairs; throws Error(inconsistent).
    void check(const FinDimLie& l) const;
};

std::size_t h1_dim(const FinDimLie& l, const FinModule& v);
/// H^1(L, Hom(V1, V2)) where x acts on M by A2(x) M - M A1(x).
std::size_t ext1_dim(const FinDimLie& l, const FinModule& v1, const FinModule& v2);
/// dim K_lambda - dim D_lambda for a character lambda vanishing on [L, L].
std::size_t h1_onedim_via_Klambda(const FinDimLie& l, const std::vector<Rat>& lambda);

/// Dimension of {v : x.v = 0 for all x}.
std::size_t invariants_dim(const FinDimLie& l, const FinModule& v);

FinModule trivial_module(const FinDimLie& l);
FinModule one_dim_module(const FinDimLie& l, const std::vector<Rat>& lambda);
FinModule hom_module(const FinModule& v1, const FinModule& v2);
FinModule dual_module(const FinModule& v);
/// Pulls back along phi: L -> g given by a (dim g) x (dim L) matrix.
FinModule pullback(const FinModule& m, const RatMatrix& phi);

FinDimLie direct_sum(const FinDimLie& a, const FinDimLie& b);
/// M1 (x) M2 as a module over L1 + L2.
FinModule external_tensor(const FinModule& m1, const FinModule& m2);

/// Structure constants of the span of traceless matrices (basis must be closed
/// under commutators); throws when a commutator leaves the span.
FinDimLie lie_from_matrices(const std::vector<RatMatrix>& basis, std::vector<std::string> labels = {});

struct MatrixLie {
    FinDimLie lie;
    std::vector<RatMatrix> basis;  // basis elements as n x n matrices
};

/// sl2 (A1) or sl3 (A2): basis E_ij (i != j) then H_i = E_ii - E_i+1,i+1.
MatrixLie builtin_simple(std::string_view type);

/// Irreducible sl_n-module of highest weight (a, 0, ..., 0, b) restricted to
/// the given matrix basis of sl_n; realized inside Sym^a(k^n) (x) Sym^b(k^n*).
FinModule sl_module(const std::vector<RatMatrix>& basis, const Weight& lambda);

/// Evaluation module of a builtin simple algebra; label dimension at most 64.
FinModule evaluation_module(const MatrixLie& g, const IrrepLabel& label);

/// g (x) k[t]/(t^N); basis element (a, i) has index i * dim g + a.
FinDimLie truncated_current(const FinDimLie& g, std::size_t n);

struct OnsagerPair {
    std::vector<RatMatrix> g_basis;  // eigenbasis of the involution
    std::vector<std::size_t> g0_rss, g0_ab, g1;
    /// g0_ab basis element acts on the g1 constituents by +-rho; rho(h) for
    /// the single g0_ab basis element (used to translate charges).
    Rat rho_value = 0;
};

/// sl2 with the involution Ad(diag(1, -1)): h fixed, e and f negated.
OnsagerPair builtin_onsager_sl2();
/// sl3 with X -> -X^T: g0 = so3, g1 = symmetric traceless matrices.
OnsagerPair builtin_onsager_sl3_transpose();

struct OnsagerQuotient {
    FinDimLie lie;
    /// Evaluation onto g^x: rows indexed by g-basis (or g0 part at fixed points), columns by quotient basis.
    RatMatrix evaluation;
    /// Column indices of g_basis kept in the image of `evaluation` (all of g at free points, g0 at fixed points).
    std::vector<std::size_t> image_basis;
    /// For each quotient basis element: (g basis index, power of u = z - z0).
    std::vector<std::pair<std::size_t, std::size_t>> index;
};

/// M / K'_x for t = x. Fixed points: x = 1 or -1.
OnsagerQuotient build_onsager_quotient(const OnsagerPair& pair, const Rat& x);

/// Exchange algebra near a point: s (x) k[u_1..u_d]/(u)^2 at a fixed point,
/// (s + s) (x) k[u_1..u_d]/(u)^2 at a free orbit. `evaluation` maps onto s or s + s.
struct ExchangeQuotient {
    FinDimLie lie;
    RatMatrix evaluation;
};
ExchangeQuotient build_exchange_quotient(const FinDimLie& s, bool fixed, std::size_t tangent_dim);

}  // namespace emext
