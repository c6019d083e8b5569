#pragma once

// Characters of irreducible modules: Freudenthal multiplicities, the Weyl
// dimension formula, Brauer-Klimyk tensor decomposition and Hom dimensions
// for a reductive algebra (semisimple part plus an abelian part acting by
// rational charges).

#include <map>
#include <string>
#include <vector>

#include "emext/rootsys.hpp"

namespace emext {

struct IrrepLabel {
    Weight highest_weight;
    std::vector<Rat> charges;

    bool is_trivial() const;

    friend bool operator==(const IrrepLabel& a, const IrrepLabel& b) {
        return a.highest_weight == b.highest_weight && a.charges == b.charges;
    }
    friend bool operator<(const IrrepLabel& a, const IrrepLabel& b) {
        if (a.highest_weight != b.highest_weight) return a.highest_weight < b.highest_weight;
        return a.charges < b.charges;
    }
};

using WeightMultiset = std::map<Weight, long>;

struct ModuleExpr {
    std::map<IrrepLabel, long> terms;

    void add(const IrrepLabel& label, long mult = 1);
    void add(const ModuleExpr& other, long mult = 1);
    bool empty() const noexcept { return terms.empty(); }
    long multiplicity(const IrrepLabel& label) const;

    friend bool operator==(const ModuleExpr&, const ModuleExpr&) = default;
};

std::string format_charges(const std::vector<Rat>& charges);
std::string format_label(const IrrepLabel& label);
std::string format_module(const ModuleExpr& m);

/// Multiplicities of the dominant weights of V(lambda). Memoized per
/// (root system, lambda); safe to call concurrently.
const WeightMultiset& dominant_multiplicities(const CartanData& cd, const Weight& lambda);

/// Full weight system of V(lambda) with multiplicities.
WeightMultiset weight_multiplicities(const CartanData& cd, const Weight& lambda);

/// Weights (with multiplicity) of a formal sum of irreducibles, ignoring charges.
WeightMultiset module_weights(const CartanData& cd, const ModuleExpr& m);

Int dim(const CartanData& cd, const Weight& lambda);
Int dim(const CartanData& cd, const ModuleExpr& m);

/// V(lambda) (x) V(mu) by Brauer-Klimyk over the weights of V(mu).
ModuleExpr tensor_decompose(const CartanData& cd, const Weight& lambda, const Weight& mu);
/// Same with charges added.
ModuleExpr tensor_decompose(const CartanData& cd, const IrrepLabel& a, const IrrepLabel& b);
ModuleExpr tensor_product(const CartanData& cd, const ModuleExpr& a, const ModuleExpr& b);

/// Multiplicity of V(nu) in V(lambda) (x) V(mu).
long tensor_multiplicity(const CartanData& cd, const Weight& lambda, const Weight& mu, const Weight& nu);

/// dim Hom(U (x) V, W).
long hom_dim(const CartanData& cd, const ModuleExpr& u, const IrrepLabel& v, const IrrepLabel& w);

IrrepLabel dual_label(const CartanData& cd, const IrrepLabel& v);
ModuleExpr dual_module(const CartanData& cd, const ModuleExpr& m);

IrrepLabel trivial_label(const CartanData& cd, std::size_t abelian_rank);
/// Adjoint module of (semisimple part) + (abelian part of the given rank).
ModuleExpr adjoint_module(const CartanData& cd, std::size_t abelian_rank = 0);

void check_label(const CartanData& cd, const IrrepLabel& v, std::size_t abelian_rank);

}  // namespace emext
