#include "emext/emalg.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace emext {

const char* to_string(Family f) noexcept {
    switch (f) {
    case Family::untwisted: return "untwisted";
    case Family::multiloop: return "multiloop";
    case Family::exchange: return "exchange";
    case Family::onsager: return "onsager";
    }
    return "unknown";
}

const PointSpec* AlgebraConfig::find_point(const std::string& id) const {
    for (const auto& p : points)
        if (p.id == id) return &p;
    return nullptr;
}

const PointSpec& AlgebraConfig::point(const std::string& id) const {
    if (const auto* p = find_point(id)) return *p;
    throw Error(ErrorCode::invalid_input, "unknown point \"" + id + "\"");
}

bool AlgebraConfig::is_perfect() const {
    switch (family) {
    case Family::untwisted:
    case Family::multiloop: return g_ab_dim == 0;
    case Family::exchange: return true;
    case Family::onsager: return g0_ab_dim == 0;
    }
    return true;
}

const EvalRepSpec& Document::rep(const std::string& id) const {
    auto it = reps.find(id);
    if (it == reps.end()) throw Error(ErrorCode::invalid_input, "unknown rep \"" + id + "\"");
    return it->second;
}

namespace {

RootSystemSpec doubled(const RootSystemSpec& s) {
    RootSystemSpec out = s;
    out.components.insert(out.components.end(), s.components.begin(), s.components.end());
    return out;
}

}  // namespace

FixedAlgebra g_fixed_at(const AlgebraConfig& config, const PointSpec& point) {
    switch (config.family) {
    case Family::untwisted:
    case Family::multiloop: return {config.g_spec, config.g_ab_dim};
    case Family::exchange:
        return point.fixed_point ? FixedAlgebra{config.s_spec, 0} : FixedAlgebra{doubled(config.s_spec), 0};
    case Family::onsager:
        return point.fixed_point ? FixedAlgebra{config.g0_spec, config.g0_ab_dim} : FixedAlgebra{config.g_spec, 0};
    }
    throw Error(ErrorCode::invalid_input, "unknown family");
}

std::string format_diagnostics(const std::vector<Diagnostic>& diags) {
    std::string out;
    for (const auto& d : diags) {
        if (!out.empty()) out += '\n';
        if (d.line > 0) out += "line " + std::to_string(d.line) + ": ";
        out += d.message;
    }
    return out;
}

std::vector<Diagnostic> validate(const AlgebraConfig& c) {
    std::vector<Diagnostic> diags;
    auto fail = [&](int line, std::string msg) { diags.push_back({line, std::move(msg)}); };

    switch (c.family) {
    case Family::untwisted:
    case Family::multiloop:
        if (c.g_spec.components.empty() && c.g_ab_dim == 0) fail(0, "algebra: g is required");
        if (c.family == Family::multiloop && c.n < 1) fail(0, "algebra: n must be at least 1");
        for (const auto& p : c.points) {
            if (p.stabilizer != Stabilizer::trivial || p.fixed_point)
                fail(p.line, "point \"" + p.id + "\": " + to_string(c.family) + " points have trivial stabilizer");
            if (c.family == Family::multiloop && p.tangent_dim != c.n)
                fail(p.line, "point \"" + p.id + "\": tangent_dim must equal n (" + std::to_string(c.n) + ")");
        }
        break;
    case Family::exchange:
        if (c.s_spec.components.size() != 1) fail(0, "algebra: exchange requires s with exactly one simple component");
        if (c.g_ab_dim != 0) fail(0, "algebra: exchange algebras have no abelian part");
        for (const auto& p : c.points)
            if (p.fixed_point != (p.stabilizer == Stabilizer::full))
                fail(p.line, "point \"" + p.id + "\": fixed points have full stabilizer and conversely");
        break;
    case Family::onsager: {
        if (c.g_spec.components.size() != 1) fail(0, "algebra: onsager requires a simple g");
        if (c.g_ab_dim != 0) fail(0, "algebra: onsager algebras have no abelian part in g");
        if (c.g0_ab_dim > 1) fail(0, "algebra: g0_ab_dim must be 0 or 1");
        if (c.nu.size() != c.g0_spec.rank()) {
            fail(0, "algebra: nu must have length rank(g0) = " + std::to_string(c.g0_spec.rank()));
        } else if (!is_dominant(c.nu)) {
            fail(0, "algebra: nu must be dominant");
        } else {
            const bool nu_zero = std::all_of(c.nu.begin(), c.nu.end(), [](long x) { return x == 0; });
            if (c.g0_ab_dim == 0 && nu_zero) fail(0, "algebra: nu must be nonzero when g0_ab_dim = 0");
            if (c.g0_spec.rank() > 0) {
                // faithfulness: the weights of V(nu) (x) V(nu)* span Q0
                auto cd0 = cartan_data(c.g0_spec);
                auto wts = module_weights(
                    *cd0, tensor_decompose(*cd0, c.nu, dual_weight(*cd0, c.nu)));
                std::vector<Weight> gens;
                for (const auto& [w, m] : wts) gens.push_back(w);
                auto span = span_of_weights(*cd0, gens);
                const auto& cartan = cd0->cartan();
                for (std::size_t j = 0; j < cd0->rank(); ++j) {
                    std::vector<Int> alpha(cd0->rank());
                    for (std::size_t i = 0; i < cd0->rank(); ++i) alpha[i] = cartan(i, j);
                    if (!lattice_contains(span, std::span<const Int>(alpha))) {
                        fail(0, "algebra: V(nu) is not faithful for g0 (weights of V(nu) (x) V(nu)* do not span Q0)");
                        break;
                    }
                }
            }
        }
        for (const auto& p : c.points) {
            if (p.fixed_point != (p.stabilizer == Stabilizer::full))
                fail(p.line, "point \"" + p.id + "\": fixed points have full stabilizer and conversely");
            if (p.tangent_dim != 1) fail(p.line, "point \"" + p.id + "\": onsager points have tangent_dim 1");
            if (p.param) {
                const Rat& t = *p.param;
                const bool unit = t == 1 || t == -1;
                if (p.fixed_point && !unit) fail(p.line, "point \"" + p.id + "\": fixed points are t = 1 or t = -1");
                if (!p.fixed_point && (unit || sgn(t) == 0))
                    fail(p.line, "point \"" + p.id + "\": free points need t not in {0, 1, -1}");
            }
        }
        break;
    }
    }

    std::set<std::string> ids;
    for (const auto& p : c.points)
        if (!ids.insert(p.id).second) fail(p.line, "duplicate point \"" + p.id + "\"");
    return diags;
}

EvalRepSpec normalized(const AlgebraConfig& config, EvalRepSpec rep) {
    for (auto it = rep.support.begin(); it != rep.support.end();) {
        const PointSpec* p = config.find_point(it->first);
        if (p) {
            auto fx = g_fixed_at(config, *p);
            if (it->second.charges.empty()) it->second.charges.assign(fx.abelian_rank, Rat(0));
        }
        if (it->second.is_trivial() && p) {
            it = rep.support.erase(it);
        } else {
            ++it;
        }
    }
    return rep;
}

std::vector<Diagnostic> validate(const AlgebraConfig& config, const EvalRepSpec& rep) {
    std::vector<Diagnostic> diags;
    auto fail = [&](std::string msg) { diags.push_back({rep.line, "rep \"" + rep.id + "\": " + std::move(msg)}); };
    std::map<std::string, std::string> orbit_owner;
    for (const auto& [pid, label] : rep.support) {
        const PointSpec* p = config.find_point(pid);
        if (!p) {
            fail("unknown point \"" + pid + "\"");
            continue;
        }
        auto [it, fresh] = orbit_owner.emplace(p->orbit, pid);
        if (!fresh) fail("points \"" + it->second + "\" and \"" + pid + "\" lie in the same orbit");
        auto fx = g_fixed_at(config, *p);
        try {
            auto cd = cartan_data(fx.spec);
            check_label(*cd, label, fx.abelian_rank);
        } catch (const Error& e) {
            fail("at \"" + pid + "\": " + e.what());
        }
    }
    if (!rep.noneval_tag.empty() && config.g_ab_dim == 0)
        fail("noneval tag given but every one-dimensional representation of this algebra is an evaluation representation");
    return diags;
}

Document load_document(const std::string& text) {
    Document doc = parse_document(text);
    auto diags = validate(doc.algebra);
    if (diags.empty()) {
        for (auto& [id, rep] : doc.reps) {
            rep = normalized(doc.algebra, std::move(rep));
            auto more = validate(doc.algebra, rep);
            diags.insert(diags.end(), more.begin(), more.end());
        }
    }
    if (!diags.empty()) throw Error(ErrorCode::invalid_input, format_diagnostics(diags));
    return doc;
}

Document load_document_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::invalid_input, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_document(ss.str());
}

}  // namespace emext
