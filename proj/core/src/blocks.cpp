#include "emext/blocks.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "emext/ext.hpp"

namespace emext {

bool BlockClass::is_zero() const {
    if (kind == Kind::Zero) return true;
    auto zero_int = [](const Int& x) { return sgn(x) == 0; };
    auto zero_rat = [](const Rat& x) { return sgn(x) == 0; };
    return std::all_of(coset.begin(), coset.end(), zero_int) &&
           std::all_of(charges.begin(), charges.end(), zero_rat) && sgn(charge_mod_z) == 0;
}

std::string BlockClass::to_string() const {
    if (kind == Kind::Zero) return "0";
    std::ostringstream os;
    // show only coordinates carrying a nontrivial factor
    std::vector<std::string> parts;
    const auto& f = quotient.invariant_factors();
    for (std::size_t i = 0; i < coset.size(); ++i)
        if (f[i] != 1) parts.push_back(coset[i].get_str());
    if (parts.empty()) parts.push_back("0");
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    if (kind == Kind::OnsagerFixed) os << ";" << charge_mod_z << " mod Z";
    if (!charges.empty()) os << ";charge=" << format_charges(charges);
    return os.str();
}

std::string SpectralCharacter::to_string() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [pid, cls] : values) {
        if (!first) out += ", ";
        first = false;
        out += pid + ":" + cls.to_string();
    }
    out += "}";
    if (!noneval_tag.empty()) out += " tag=\"" + noneval_tag + "\"";
    return out;
}

QuotientGroup block_quotient(const AlgebraConfig& config, const PointSpec& x) {
    auto fx = g_fixed_at(config, x);
    auto cd = cartan_data(fx.spec);
    if (config.family == Family::onsager && x.fixed_point) {
        if (config.g0_ab_dim == 0) {
            std::vector<Weight> gens;
            for (const auto& [w, m] : weight_multiplicities(*cd, config.nu)) gens.push_back(w);
            return quotient_of(span_of_weights(*cd, gens));
        }
        return quotient_of(root_lattice(*cd));
    }
    return quotient_of(root_lattice(*cd));
}

BlockClass block_class(const AlgebraConfig& config, const PointSpec& x, const IrrepLabel& v) {
    auto fx = g_fixed_at(config, x);
    auto cd = cartan_data(fx.spec);
    check_label(*cd, v, fx.abelian_rank);
    BlockClass cls;
    if (v.is_trivial()) return cls;
    cls.quotient = block_quotient(config, x);
    if (config.family == Family::onsager && x.fixed_point && config.g0_ab_dim == 1) {
        // (lambda, a) ~ (lambda + n nu, a + n); pick n with a + n in [0, 1)
        const Rat& a = v.charges.front();
        Int fl;
        mpz_fdiv_q(fl.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
        const Int n = -fl;
        std::vector<Int> shifted(cd->rank());
        for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] = v.highest_weight[i] + n * config.nu[i];
        cls.kind = BlockClass::Kind::OnsagerFixed;
        cls.coset = cls.quotient.coset(std::span<const Int>(shifted));
        cls.charge_mod_z = a + Rat(n);
        return cls;
    }
    cls.kind = BlockClass::Kind::LatticeCoset;
    cls.coset = cls.quotient.coset(std::span<const long>(v.highest_weight));
    if (fx.abelian_rank > 0) cls.charges = v.charges;
    return cls;
}

SpectralCharacter spectral_character(const AlgebraConfig& config, const EvalRepSpec& psi_in) {
    const EvalRepSpec psi = normalized(config, psi_in);
    auto diags = validate(config, psi);
    if (!diags.empty()) throw Error(ErrorCode::invalid_input, format_diagnostics(diags));
    SpectralCharacter chi;
    chi.noneval_tag = psi.noneval_tag;
    for (const auto& [pid, label] : psi.support) {
        auto cls = block_class(config, config.point(pid), label);
        if (!cls.is_zero()) chi.values.emplace(pid, std::move(cls));
    }
    return chi;
}

bool same_block(const AlgebraConfig& config, const EvalRepSpec& psi, const EvalRepSpec& psi2) {
    return spectral_character(config, psi) == spectral_character(config, psi2);
}

std::vector<SpectralCharacter> enumerate_blocks(const AlgebraConfig& config, const std::vector<std::string>& support) {
    if ((config.family == Family::untwisted || config.family == Family::multiloop) && config.g_ab_dim > 0)
        throw Error(ErrorCode::nonfinite, "nonfinite block set: the abelian part of g contributes k-valued charges");
    std::vector<std::pair<std::string, std::vector<BlockClass>>> factors;
    std::set<std::string> seen;
    for (const auto& pid : support) {
        const auto& x = config.point(pid);
        if (!seen.insert(pid).second) throw Error(ErrorCode::invalid_input, "point \"" + pid + "\" listed twice");
        if (config.family == Family::onsager && x.fixed_point && config.g0_ab_dim > 0)
            throw Error(ErrorCode::nonfinite, "nonfinite block set: point \"" + pid + "\" contributes (P0/Q0) x k/Z");
        QuotientGroup q = block_quotient(config, x);
        if (!q.is_finite())
            throw Error(ErrorCode::nonfinite, "nonfinite block set: point \"" + pid + "\" has a free factor");
        std::vector<BlockClass> classes;
        for (auto& e : q.elements()) {
            BlockClass c;
            c.kind = BlockClass::Kind::LatticeCoset;
            c.quotient = q;
            c.coset = std::move(e);
            classes.push_back(std::move(c));
        }
        factors.emplace_back(pid, std::move(classes));
    }
    std::vector<SpectralCharacter> out{SpectralCharacter{}};
    for (const auto& [pid, classes] : factors) {
        std::vector<SpectralCharacter> next;
        for (const auto& chi : out)
            for (const auto& c : classes) {
                SpectralCharacter extended = chi;
                if (!c.is_zero()) extended.values.emplace(pid, c);
                next.push_back(std::move(extended));
            }
        out = std::move(next);
    }
    return out;
}

QuotientGroup weight_equivalence_quotient(const CartanData& cd, const WeightMultiset& u) {
    std::vector<Weight> gens;
    for (const auto& [w, m] : u) gens.push_back(w);
    auto span = span_of_weights(cd, gens);
    for (std::size_t j = 0; j < cd.rank(); ++j) {
        std::vector<Int> alpha(cd.rank());
        for (std::size_t i = 0; i < cd.rank(); ++i) alpha[i] = cd.cartan()(i, j);
        if (!lattice_contains(span, std::span<const Int>(alpha)))
            throw Error(ErrorCode::invalid_input, "Span_Z wt(U) does not contain the root lattice; U is not faithful");
    }
    return quotient_of(span);
}

long default_box_bound(const Weight& lambda, const Weight& mu) {
    long m = 0;
    for (long x : lambda) m = std::max(m, x);
    for (long x : mu) m = std::max(m, x);
    return 10 * (1 + m);
}

bool chain_reachable(const CartanData& cd, const ModuleExpr& u, const Weight& lambda, const Weight& mu,
                     long box_bound) {
    cd.check_weight(lambda);
    cd.check_weight(mu);
    if (!is_dominant(lambda) || !is_dominant(mu))
        throw Error(ErrorCode::not_dominant, "chain_reachable: endpoints must be dominant");
    if (lambda == mu) return true;
    auto in_box = [&](const Weight& w) {
        return std::all_of(w.begin(), w.end(), [&](long x) { return x <= box_bound; });
    };
    if (!in_box(lambda) || !in_box(mu)) return false;

    ModuleExpr both = u;
    both.add(dual_module(cd, u));
    std::set<Weight> seen{lambda};
    std::deque<Weight> queue{lambda};
    while (!queue.empty()) {
        Weight w = std::move(queue.front());
        queue.pop_front();
        for (const auto& [t, m] : both.terms) {
            for (const auto& [next, k] : tensor_decompose(cd, w, t.highest_weight).terms) {
                const Weight& hw = next.highest_weight;
                if (!in_box(hw) || !seen.insert(hw).second) continue;
                if (hw == mu) return true;
                queue.push_back(hw);
            }
        }
    }
    return false;
}

}  // namespace emext
