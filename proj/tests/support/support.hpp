#pragma once

// Helpers shared by the unit and acceptance tests: independent brute-force
// checks and small generators.

#include <random>
#include <string>
#include <vector>

#include "emext/chars.hpp"
#include "emext/oracle.hpp"
#include "emext/rootsys.hpp"

namespace emext::testing {

/// Decomposes a character by repeatedly peeling off the irreducible whose
/// highest weight is a weight of maximal height.
ModuleExpr strip_character(const CartanData& cd, WeightMultiset chi);

/// Character of V(lambda) (x) V(mu) by summing weight pairs.
WeightMultiset product_character(const CartanData& cd, const Weight& lambda, const Weight& mu);

/// Dominant weights with coordinates <= bound and dim V <= max_dim, lexicographic.
std::vector<Weight> small_dominant_weights(const CartanData& cd, long bound, long max_dim);

Weight random_weight(std::mt19937& rng, std::size_t rank, long max_coord);

/// Evaluation at degree zero for truncated_current(g, 2).
RatMatrix current_evaluation(std::size_t dim_g);

/// Character of L vanishing on [L, L], random integer combination of the annihilator.
std::vector<Rat> random_character_on_abelianization(std::mt19937& rng, const FinDimLie& l);

}  // namespace emext::testing
