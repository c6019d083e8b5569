#include "emext/ext.hpp"

#include <set>

namespace emext {

void ExtResult::add(std::string what, long contribution) {
    finite_dim += contribution;
    breakdown.emplace_back(std::move(what), contribution);
}

void ExtResult::add_symbolic(SymbolicKind kind, long copies) {
    for (auto& s : infinite_summands)
        if (s.kind == kind) {
            s.copies += copies;
            return;
        }
    infinite_summands.push_back({kind, copies});
}

void ExtResult::append(const ExtResult& other, const std::string& prefix) {
    for (const auto& [what, n] : other.breakdown) add(prefix + what, n);
    for (const auto& s : other.infinite_summands) add_symbolic(s.kind, s.copies);
    for (const auto& note : other.notes) notes.push_back(prefix + note);
}

std::string format_symbolic(const SymbolicSummand& s) {
    const char* name = s.kind == SymbolicKind::DualOfMab ? "dual(M_ab)" : "dual(M_ab,gss)";
    return std::string(name) + "^" + std::to_string(s.copies);
}

std::string format_ext(const ExtResult& r) {
    std::string out = std::to_string(r.finite_dim);
    for (const auto& s : r.infinite_summands) out += " + " + format_symbolic(s);
    return out;
}

ModuleExpr onsager_g1(const AlgebraConfig& config) {
    auto cd0 = cartan_data(config.g0_spec);
    ModuleExpr g1;
    if (config.g0_ab_dim == 1) {
        g1.add(IrrepLabel{config.nu, {Rat(1)}});
        g1.add(IrrepLabel{dual_weight(*cd0, config.nu), {Rat(-1)}});
    } else {
        g1.add(IrrepLabel{config.nu, {}});
    }
    return g1;
}

namespace {

IrrepLabel without_charges(const IrrepLabel& v) { return IrrepLabel{v.highest_weight, {}}; }

// Ext at one point for the part of the algebra with no abelian factor in g.
ExtResult local_ext(const AlgebraConfig& config, const PointSpec& x, const IrrepLabel& v, const IrrepLabel& v2) {
    ExtResult r;
    auto fx = g_fixed_at(config, x);
    auto cd = cartan_data(fx.spec);
    const std::string where = "at " + x.id + ": ";
    switch (config.family) {
    case Family::untwisted:
    case Family::multiloop: {
        const auto a = without_charges(v), b = without_charges(v2);
        const long h = hom_dim(*cd, adjoint_module(*cd), a, b);
        r.add(where + "tangent_dim * dim Hom_g(g, V*(x)V') = " + std::to_string(x.tangent_dim) + "*" +
                  std::to_string(h),
              static_cast<long>(x.tangent_dim) * h);
        break;
    }
    case Family::exchange: {
        const long h = hom_dim(*cd, adjoint_module(*cd), v, v2);
        const std::string alg = x.fixed_point ? "s" : "s+s";
        r.add(where + "tangent_dim * dim Hom_" + alg + "(" + alg + ", V*(x)V') = " + std::to_string(x.tangent_dim) +
                  "*" + std::to_string(h),
              static_cast<long>(x.tangent_dim) * h);
        break;
    }
    case Family::onsager:
        if (!x.fixed_point) {
            r.add(where + "dim Hom_g(g, V*(x)V')", hom_dim(*cd, adjoint_module(*cd), v, v2));
            if (v == v2 && config.g0_ab_dim > 0)
                r.add(where + "V = V': trivial summands of K_ab", 2 * static_cast<long>(config.g0_ab_dim));
        } else if (config.g0_ab_dim == 0 || v.charges != v2.charges) {
            r.add(where + "dim Hom_g0(g1, V*(x)V')", hom_dim(*cd, onsager_g1(config), v, v2));
        } else if (v == v2) {
            r.add(where + "V = V', g0_ab != 0", 2);
        } else {
            r.add(where + "equal charges, V != V', g0_ab != 0", 0);
        }
        break;
    }
    return r;
}

std::map<std::string, IrrepLabel> rss_support(const AlgebraConfig& config, const EvalRepSpec& psi) {
    std::map<std::string, IrrepLabel> out;
    for (const auto& [pid, label] : psi.support) {
        auto stripped = without_charges(label);
        if (!stripped.is_trivial()) out.emplace(pid, std::move(stripped));
    }
    (void)config;
    return out;
}

void require_valid(const AlgebraConfig& config, const EvalRepSpec& psi) {
    auto diags = validate(config, psi);
    if (!diags.empty()) throw Error(ErrorCode::invalid_input, format_diagnostics(diags));
}

// Ext for a family without abelian part in g; supports already normalized.
ExtResult reductive_free_ext(const AlgebraConfig& config, const std::map<std::string, IrrepLabel>& a,
                             const std::map<std::string, IrrepLabel>& b, std::size_t abelian_rank_hint) {
    ExtResult r;
    std::set<std::string> points;
    for (const auto& [pid, l] : a) points.insert(pid);
    for (const auto& [pid, l] : b) points.insert(pid);

    auto label_at = [&](const std::map<std::string, IrrepLabel>& s, const std::string& pid) {
        if (auto it = s.find(pid); it != s.end()) return it->second;
        const auto& x = config.point(pid);
        auto fx = g_fixed_at(config, x);
        auto cd = cartan_data(fx.spec);
        return trivial_label(*cd, abelian_rank_hint == 0 ? 0 : fx.abelian_rank);
    };

    std::vector<std::string> differing;
    for (const auto& pid : points)
        if (!(label_at(a, pid) == label_at(b, pid))) differing.push_back(pid);

    if (differing.size() >= 2) {
        r.add("supports differ on " + std::to_string(differing.size()) + " orbits", 0);
        return r;
    }
    if (differing.size() == 1) {
        const auto& x = config.point(differing.front());
        r.append(local_ext(config, x, label_at(a, x.id), label_at(b, x.id)));
        return r;
    }

    // psi = psi'
    long mab = 0;
    if (config.family == Family::onsager) mab = 2 * static_cast<long>(config.g0_ab_dim);
    if (points.empty()) {
        r.add("trivial module: dim M_ab", mab);
        return r;
    }
    for (const auto& pid : points) {
        const auto& x = config.point(pid);
        r.append(local_ext(config, x, label_at(a, pid), label_at(b, pid)));
    }
    if (mab > 0 && points.size() > 1)
        r.add("minus (|x|-1) copies of M_ab*", -static_cast<long>(points.size() - 1) * mab);
    return r;
}

}  // namespace

ExtResult single_point_ext(const AlgebraConfig& config, const PointSpec& x, const IrrepLabel& v,
                           const IrrepLabel& v2) {
    auto fx = g_fixed_at(config, x);
    auto cd = cartan_data(fx.spec);
    check_label(*cd, v, fx.abelian_rank);
    check_label(*cd, v2, fx.abelian_rank);
    if ((config.family == Family::untwisted || config.family == Family::multiloop) && config.g_ab_dim > 0) {
        ExtResult r;
        if (v.charges != v2.charges) {
            r.add("at " + x.id + ": abelian charges differ", 0);
            return r;
        }
        r.append(local_ext(config, x, v, v2));
        if (without_charges(v) == without_charges(v2)) r.add_symbolic(SymbolicKind::DualOfMab, 1);
        return r;
    }
    return local_ext(config, x, v, v2);
}

ExtResult ext_dim(const AlgebraConfig& config, const EvalRepSpec& psi_in, const EvalRepSpec& psi2_in) {
    const EvalRepSpec psi = normalized(config, psi_in);
    const EvalRepSpec psi2 = normalized(config, psi2_in);
    require_valid(config, psi);
    require_valid(config, psi2);

    ExtResult r;
    if (psi.noneval_tag != psi2.noneval_tag) {
        r.add("noneval mismatch", 0);
        return r;
    }
    const bool split = (config.family == Family::untwisted || config.family == Family::multiloop) && config.g_ab_dim > 0;
    if (!split) return reductive_free_ext(config, psi.support, psi2.support, 1);

    // reductive splitting: M = M(X, g_rss)^Gamma + M(X, g_ab)^Gamma
    std::set<std::string> points;
    for (const auto& [pid, l] : psi.support) points.insert(pid);
    for (const auto& [pid, l] : psi2.support) points.insert(pid);
    const std::vector<Rat> zero(config.g_ab_dim);
    for (const auto& pid : points) {
        auto ca = psi.support.count(pid) ? psi.support.at(pid).charges : zero;
        auto cb = psi2.support.count(pid) ? psi2.support.at(pid).charges : zero;
        if (ca != cb) {
            r.add("abelian charges differ at " + pid, 0);
            return r;
        }
    }
    auto a = rss_support(config, psi);
    auto b = rss_support(config, psi2);
    r.append(reductive_free_ext(config, a, b, 0));
    if (a == b) r.add_symbolic(SymbolicKind::DualOfMab, 1);
    return r;
}

ExtResult kunneth_ext(const KunnethSide& first, const KunnethSide& second) {
    ExtResult r;
    if (first.isomorphic) r.append(second.ext, "second factor: ");
    if (second.isomorphic) r.append(first.ext, "first factor: ");
    if (!first.isomorphic && !second.isomorphic) r.add("neither factor isomorphic", 0);
    return r;
}

ExtResult abelian_ext(std::optional<long> dim_l, const std::vector<Rat>& lambda, const std::vector<Rat>& mu) {
    ExtResult r;
    if (lambda != mu) {
        r.add("distinct characters", 0);
    } else if (dim_l) {
        r.add("dual of L", *dim_l);
    } else {
        r.add_symbolic(SymbolicKind::DualOfMab, 1);
    }
    return r;
}

ExtResult graded_ext_general(const CartanData& cd, const ModuleExpr& q_mod_kprime,
                             const std::map<std::string, long>& graded_tangent,
                             const std::map<std::string, ModuleExpr>& g_omega, const IrrepLabel& v,
                             const IrrepLabel& v2) {
    ExtResult r;
    r.add("dim Hom(Q/K', V*(x)V')", hom_dim(cd, q_mod_kprime, v, v2));
    for (const auto& [omega, t] : graded_tangent) {
        auto it = g_omega.find(omega);
        if (it == g_omega.end())
            throw Error(ErrorCode::invalid_input, "graded_ext_general: no module for coset " + omega);
        const long h = hom_dim(cd, it->second, v, v2);
        r.add("coset " + omega + ": " + std::to_string(h) + "*" + std::to_string(t), h * t);
    }
    return r;
}

}  // namespace emext
