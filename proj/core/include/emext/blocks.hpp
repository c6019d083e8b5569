#pragma once

// Block classes (values of spectral characters) and block enumeration.

#include <map>
#include <string>
#include <vector>

#include "emext/emalg.hpp"

namespace emext {

struct BlockClass {
    enum class Kind { Zero, LatticeCoset, OnsagerFixed };

    Kind kind = Kind::Zero;
    QuotientGroup quotient;
    std::vector<Int> coset;    // canonical coordinates in `quotient`
    std::vector<Rat> charges;  // LatticeCoset with abelian g: exact charges
    Rat charge_mod_z;          // OnsagerFixed: representative in [0, 1)

    bool is_zero() const;
    std::string to_string() const;

    friend bool operator==(const BlockClass& a, const BlockClass& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        return a.kind == b.kind && a.coset == b.coset && a.charges == b.charges && a.charge_mod_z == b.charge_mod_z;
    }
};

struct SpectralCharacter {
    std::map<std::string, BlockClass> values;
    std::string noneval_tag;

    std::string to_string() const;
    friend bool operator==(const SpectralCharacter&, const SpectralCharacter&) = default;
};

/// The group B_x of block classes at a point when it is a lattice quotient;
/// throws nonfinite for Onsager fixed points with g0_ab != 0.
QuotientGroup block_quotient(const AlgebraConfig& config, const PointSpec& x);

BlockClass block_class(const AlgebraConfig& config, const PointSpec& x, const IrrepLabel& v);
SpectralCharacter spectral_character(const AlgebraConfig& config, const EvalRepSpec& psi);
bool same_block(const AlgebraConfig& config, const EvalRepSpec& psi, const EvalRepSpec& psi2);

/// Every spectral character supported on the given points (zero values
/// omitted). Throws nonfinite when some B_x is infinite.
std::vector<SpectralCharacter> enumerate_blocks(const AlgebraConfig& config, const std::vector<std::string>& support);

/// P / Span_Z wt(U); throws invalid_input when the span misses Q.
QuotientGroup weight_equivalence_quotient(const CartanData& cd, const WeightMultiset& u);

/// Breadth-first search over dominant weights with coordinates in [0, box_bound],
/// joining lambda to every constituent of U (x) V(lambda) and of U^* (x) V(lambda).
bool chain_reachable(const CartanData& cd, const ModuleExpr& u, const Weight& lambda, const Weight& mu,
                     long box_bound);

/// 10 * (1 + largest coordinate of lambda and mu).
long default_box_bound(const Weight& lambda, const Weight& mu);

}  // namespace emext
