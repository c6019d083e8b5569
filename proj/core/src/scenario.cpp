#include "emext/scenario.hpp"

#include <set>

namespace emext {

namespace {

std::string system_name(const RootSystemSpec& s) { return s.to_string(); }

FinModule label_module(const MatrixLie& g, const IrrepLabel& label) { return evaluation_module(g, label); }

}  // namespace

OracleInstance oracle_instance(const AlgebraConfig& config, const EvalRepSpec& psi_in, const EvalRepSpec& psi2_in) {
    const EvalRepSpec psi = normalized(config, psi_in);
    const EvalRepSpec psi2 = normalized(config, psi2_in);
    for (const auto* r : {&psi, &psi2}) {
        auto diags = validate(config, *r);
        if (!diags.empty()) throw Error(ErrorCode::invalid_input, format_diagnostics(diags));
    }
    if (!psi.noneval_tag.empty() || !psi2.noneval_tag.empty())
        throw Error(ErrorCode::unsupported, "oracle: non-evaluation parts are not realized");
    std::set<std::string> points;
    for (const auto& [pid, l] : psi.support) points.insert(pid);
    for (const auto& [pid, l] : psi2.support) points.insert(pid);
    if (points.size() != 1)
        throw Error(ErrorCode::unsupported, "oracle: both reps must be supported at one common point");
    const PointSpec& x = config.point(*points.begin());
    const auto fx = g_fixed_at(config, x);
    auto cd = cartan_data(fx.spec);
    auto label_of = [&](const EvalRepSpec& r) {
        auto it = r.support.find(x.id);
        return it != r.support.end() ? it->second : trivial_label(*cd, fx.abelian_rank);
    };
    const IrrepLabel a = label_of(psi), b = label_of(psi2);

    OracleInstance inst;
    switch (config.family) {
    case Family::untwisted:
    case Family::multiloop:
    case Family::exchange: {
        if (config.g_ab_dim != 0) throw Error(ErrorCode::unsupported, "oracle: abelian part of g is not realized");
        const RootSystemSpec simple = config.family == Family::exchange ? config.s_spec : config.g_spec;
        const std::string name = system_name(simple);
        if (name != "A1" && name != "A2")
            throw Error(ErrorCode::unsupported, "oracle: only A1 and A2 are realized, not " + name);
        MatrixLie s = builtin_simple(name);
        const bool doubled = config.family == Family::exchange && !x.fixed_point;
        ExchangeQuotient q = build_exchange_quotient(s.lie, !doubled, x.tangent_dim);
        auto module_for = [&](const IrrepLabel& l) {
            if (!doubled) return pullback(label_module(s, l), q.evaluation);
            const std::size_t r = l.highest_weight.size() / 2;
            IrrepLabel left{Weight(l.highest_weight.begin(), l.highest_weight.begin() + static_cast<long>(r)), {}};
            IrrepLabel right{Weight(l.highest_weight.begin() + static_cast<long>(r), l.highest_weight.end()), {}};
            return pullback(external_tensor(label_module(s, left), label_module(s, right)), q.evaluation);
        };
        inst.lie = std::move(q.lie);
        inst.v1 = module_for(a);
        inst.v2 = module_for(b);
        inst.description = std::string(doubled ? "(" + name + "+" + name + ")" : name) + " (x) k[u_1..u_" +
                           std::to_string(x.tangent_dim) + "]/(u)^2";
        break;
    }
    case Family::onsager: {
        if (!config.builtin_sl2_pair) throw Error(ErrorCode::unsupported, "oracle: only the built-in sl2 pair is realized");
        if (!x.param) throw Error(ErrorCode::invalid_input, "oracle: point \"" + x.id + "\" needs param = t");
        OnsagerPair pair = builtin_onsager_sl2();
        OnsagerQuotient q = build_onsager_quotient(pair, *x.param);
        auto module_for = [&](const IrrepLabel& l) {
            if (x.fixed_point) {
                // g0 = k h; charge c means h acts by c * rho(h)
                RatMatrix act(1, 1);
                act(0, 0) = l.charges.front() * pair.rho_value;
                FinModule g0_mod{1, {act}};
                return pullback(g0_mod, q.evaluation);
            }
            return pullback(sl_module(pair.g_basis, l.highest_weight), q.evaluation);
        };
        inst.lie = std::move(q.lie);
        inst.v1 = module_for(a);
        inst.v2 = module_for(b);
        inst.description = "onsager sl2 quotient at t = " + x.param->get_str();
        break;
    }
    }
    inst.lie.check();
    inst.v1.check(inst.lie);
    inst.v2.check(inst.lie);
    return inst;
}

OracleComparison oracle_compare(const AlgebraConfig& config, const EvalRepSpec& psi, const EvalRepSpec& psi2) {
    OracleInstance inst = oracle_instance(config, psi, psi2);
    OracleComparison c;
    c.description = inst.description;
    c.oracle_dim = static_cast<long>(ext1_dim(inst.lie, inst.v1, inst.v2));
    c.formula = ext_dim(config, psi, psi2);
    c.agree = c.formula.infinite_summands.empty() && c.formula.finite_dim == c.oracle_dim;
    return c;
}

}  // namespace emext
