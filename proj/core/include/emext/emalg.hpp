#pragma once

// Data model for an equivariant map algebra and its irreducible evaluation
// representations, plus validation of configuration documents.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "emext/chars.hpp"

namespace emext {

enum class Family { untwisted, multiloop, exchange, onsager };
enum class Stabilizer { trivial, full };

const char* to_string(Family f) noexcept;

struct PointSpec {
    std::string id;
    std::string orbit;  // defaults to id; points sharing an orbit cannot both carry support
    Stabilizer stabilizer = Stabilizer::trivial;
    std::size_t tangent_dim = 1;
    bool fixed_point = false;
    std::optional<Rat> param;  // coordinate of the point when the oracle needs one (Onsager: t = x)
    int line = 0;
};

struct AlgebraConfig {
    Family family = Family::untwisted;
    RootSystemSpec g_spec;
    std::size_t g_ab_dim = 0;
    // multiloop
    std::size_t n = 1;
    std::vector<long> orders;
    // exchange
    RootSystemSpec s_spec;
    // onsager symmetric-pair data
    RootSystemSpec g0_spec;
    std::size_t g0_ab_dim = 0;
    Weight nu;
    bool builtin_sl2_pair = false;

    std::vector<PointSpec> points;

    const PointSpec& point(const std::string& id) const;
    const PointSpec* find_point(const std::string& id) const;
    /// True when M_ab = 0, i.e. every finite-dimensional one-dimensional module is trivial.
    bool is_perfect() const;
};

struct EvalRepSpec {
    std::string id;
    std::map<std::string, IrrepLabel> support;  // point id -> label, trivial labels dropped
    std::string noneval_tag;
    int line = 0;
};

/// Isotropy algebra g^x: a semisimple root system plus an abelian part.
struct FixedAlgebra {
    RootSystemSpec spec;
    std::size_t abelian_rank = 0;
};

FixedAlgebra g_fixed_at(const AlgebraConfig& config, const PointSpec& point);

struct Diagnostic {
    int line = 0;
    std::string message;
};

std::string format_diagnostics(const std::vector<Diagnostic>& diags);

/// Checks the algebra block and every point.
std::vector<Diagnostic> validate(const AlgebraConfig& config);
/// Checks one representation against a (valid) configuration.
std::vector<Diagnostic> validate(const AlgebraConfig& config, const EvalRepSpec& rep);

/// Drops trivial labels from the support (the canonical form of psi).
EvalRepSpec normalized(const AlgebraConfig& config, EvalRepSpec rep);

struct Document {
    AlgebraConfig algebra;
    std::map<std::string, EvalRepSpec> reps;

    const EvalRepSpec& rep(const std::string& id) const;
};

/// Parses a configuration document. Syntax errors throw Error(invalid_input)
/// with a line number; semantic problems are left to validate().
Document parse_document(const std::string& text);

/// parse_document followed by validation of the algebra and all reps; throws
/// Error(invalid_input) listing every diagnostic.
Document load_document(const std::string& text);
Document load_document_file(const std::string& path);

}  // namespace emext
