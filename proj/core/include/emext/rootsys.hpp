#pragma once

// Root systems of semisimple Lie algebras in Bourbaki numbering. Weights are
// integer vectors in the fundamental-weight basis; roots are stored in
// simple-root coordinates.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "emext/intlinalg.hpp"

namespace emext {

using Weight = std::vector<long>;

struct SimpleComponent {
    char type = 'A';
    int rank = 1;
    friend bool operator==(const SimpleComponent&, const SimpleComponent&) = default;
};

struct RootSystemSpec {
    std::vector<SimpleComponent> components;

    /// "A2", "A1xB3", or "" for the rank-0 system.
    static RootSystemSpec parse(std::string_view text);
    std::string to_string() const;
    std::size_t rank() const;
    void validate() const;

    friend bool operator==(const RootSystemSpec&, const RootSystemSpec&) = default;
};

class CartanData {
public:
    const RootSystemSpec& spec() const noexcept { return spec_; }
    const std::string& key() const noexcept { return key_; }
    std::size_t rank() const noexcept { return rank_; }

    /// cartan(i, j) = <alpha_j, alpha_i^vee>; column j is alpha_j in weight coordinates.
    const IntMatrix& cartan() const noexcept { return cartan_; }
    long cartan_at(std::size_t i, std::size_t j) const { return cartan_small_[i * rank_ + j]; }
    /// Integer-valued invariant form on simple roots (short roots of each component have length 2).
    long gram(std::size_t i, std::size_t j) const { return gram_[i * rank_ + j]; }

    const std::vector<std::vector<long>>& positive_roots() const noexcept { return positive_roots_; }
    const Weight& rho() const noexcept { return rho_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& component_boundaries() const noexcept {
        return bounds_;
    }

    /// Converts simple-root coordinates to fundamental-weight coordinates.
    Weight root_to_weight(const std::vector<long>& root) const;
    /// Highest root of each simple component, in weight coordinates.
    std::vector<Weight> highest_roots() const;

    /// <nu, alpha^vee> for a positive root alpha given in simple-root coordinates.
    Rat coroot_pairing(const Weight& nu, const std::vector<long>& alpha) const;
    /// Height of a weight: sum of its coordinates in the simple-root basis (rational).
    Rat height(const Weight& w) const;

    void check_weight(const Weight& w) const;

private:
    friend CartanData build(const RootSystemSpec& spec);

    RootSystemSpec spec_;
    std::string key_;
    std::size_t rank_ = 0;
    IntMatrix cartan_;
    std::vector<long> cartan_small_;
    std::vector<long> gram_;
    std::vector<std::vector<long>> positive_roots_;
    Weight rho_;
    std::vector<std::pair<std::size_t, std::size_t>> bounds_;
    RatMatrix inverse_cartan_;
};

CartanData build(const RootSystemSpec& spec);

/// Shared, immutable CartanData for a spec; built once per process.
std::shared_ptr<const CartanData> cartan_data(const RootSystemSpec& spec);
std::shared_ptr<const CartanData> cartan_data(std::string_view spec_text);

bool is_dominant(const Weight& w);

struct Reduction {
    Weight dominant;
    int parity = 1;
    bool singular = false;
};

/// Reflects at the first negative coordinate until dominant. `singular` is set
/// when at least one reflection was applied and the endpoint lies on a wall.
Reduction dominant_reduce(const CartanData& cd, Weight w);

/// Simple reflection s_i.
Weight reflect(const CartanData& cd, const Weight& w, std::size_t i);

/// -w0(lambda).
Weight dual_weight(const CartanData& cd, const Weight& lambda);

LatticeSubgroup root_lattice(const CartanData& cd);
LatticeSubgroup span_of_weights(const CartanData& cd, const std::vector<Weight>& weights);

std::string format_weight(const Weight& w);
/// Parses "1,0" or "[1, 0]" into a weight.
Weight parse_weight(std::string_view text);

}  // namespace emext
