#pragma once

// Closed-form Ext^1 dimensions between irreducible evaluation representations.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "emext/emalg.hpp"

namespace emext {

enum class SymbolicKind {
    DualOfMab,     // (M_ab)^*, the dual of the infinite-dimensional abelianization
    DualOfMabGss,  // (M(X, g_ab)^Gamma)^* carried through the reductive splitting
};

struct SymbolicSummand {
    SymbolicKind kind = SymbolicKind::DualOfMab;
    long copies = 1;
    friend bool operator==(const SymbolicSummand&, const SymbolicSummand&) = default;
};

struct ExtResult {
    long finite_dim = 0;
    std::vector<SymbolicSummand> infinite_summands;
    std::vector<std::pair<std::string, long>> breakdown;
    std::vector<std::string> notes;

    void add(std::string what, long contribution);
    void add_symbolic(SymbolicKind kind, long copies);
    void append(const ExtResult& other, const std::string& prefix = "");
    bool is_zero() const { return finite_dim == 0 && infinite_summands.empty(); }
};

std::string format_symbolic(const SymbolicSummand& s);
/// "3", "0 + dual(M_ab)^1", ...
std::string format_ext(const ExtResult& r);

ExtResult ext_dim(const AlgebraConfig& config, const EvalRepSpec& psi, const EvalRepSpec& psi2);

/// Ext between evaluation modules supported at the single point x.
ExtResult single_point_ext(const AlgebraConfig& config, const PointSpec& x, const IrrepLabel& v,
                           const IrrepLabel& v2);

struct KunnethSide {
    ExtResult ext;
    bool isomorphic = false;  // U_i and V_i isomorphic, so (U_i^* (x) V_i)^{L_i} is one-dimensional
};

ExtResult kunneth_ext(const KunnethSide& first, const KunnethSide& second);

/// Ext between one-dimensional modules of an abelian algebra of the given
/// dimension (nullopt = infinite-dimensional).
ExtResult abelian_ext(std::optional<long> dim_l, const std::vector<Rat>& lambda, const std::vector<Rat>& mu);

/// Hom(Q/K', V^*(x)V') plus graded tangent contributions, for semisimple g^x.
ExtResult graded_ext_general(const CartanData& cd, const ModuleExpr& q_mod_kprime,
                             const std::map<std::string, long>& graded_tangent,
                             const std::map<std::string, ModuleExpr>& g_omega, const IrrepLabel& v,
                             const IrrepLabel& v2);

/// g_1 as a g_0-module, with the charge of the g_{0,ab} action.
ModuleExpr onsager_g1(const AlgebraConfig& config);

}  // namespace emext
