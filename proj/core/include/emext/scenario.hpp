#pragma once

// Runs the brute-force oracle on a configured single-point scenario and
// compares it with the closed-form engine.

#include <string>

#include "emext/emalg.hpp"
#include "emext/ext.hpp"
#include "emext/oracle.hpp"

namespace emext {

struct OracleInstance {
    FinDimLie lie;
    FinModule v1;
    FinModule v2;
    std::string description;
};

/// Explicit finite-dimensional quotient and modules realizing Ext between two
/// evaluation modules supported at one common point. Supported: untwisted and
/// multiloop with g in {A1, A2}; exchange with s in {A1, A2}; the built-in
/// sl2 Onsager pair.
OracleInstance oracle_instance(const AlgebraConfig& config, const EvalRepSpec& psi, const EvalRepSpec& psi2);

struct OracleComparison {
    long oracle_dim = 0;
    ExtResult formula;
    bool agree = false;
    std::string description;
};

OracleComparison oracle_compare(const AlgebraConfig& config, const EvalRepSpec& psi, const EvalRepSpec& psi2);

}  // namespace emext
