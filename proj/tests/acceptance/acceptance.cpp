// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "emext/blocks.hpp"
#include "emext/emalg.hpp"
#include "emext/ext.hpp"
#include "support.hpp"

using namespace emext;
using emext::testing::current_evaluation;

namespace {

struct Outcome {
    bool pass = true;
    long checked = 0;
    std::string first_failure;

    void expect(bool ok, const std::function<std::string()>& what) {
        ++checked;
        if (!ok && pass) {
            pass = false;
            first_failure = what();
        }
    }
};

IrrepLabel lab(const Weight& w) { return IrrepLabel{w, {}}; }

std::string w2s(const Weight& w) { return format_weight(w); }

// Stock for the current-algebra criteria: g (x) k[t]/(t^2) with labels of dim <= max_dim.
struct CurrentStock {
    std::shared_ptr<const CartanData> cd;
    MatrixLie g;
    FinDimLie l;
    RatMatrix ev;
    std::vector<Weight> labels;
};

CurrentStock current_stock(const std::string& type, long bound, long max_dim) {
    CurrentStock s{cartan_data(type), builtin_simple(type), {}, {}, {}};
    s.l = truncated_current(s.g.lie, 2);
    s.ev = current_evaluation(s.g.lie.dim());
    s.labels = emext::testing::small_dominant_weights(*s.cd, bound, max_dim);
    return s;
}

long prop_current(const CurrentStock& s, const Weight& v, const Weight& w) {
    return hom_dim(*s.cd, adjoint_module(*s.cd), lab(v), lab(w));
}

Outcome criterion_untwisted() {
    Outcome o;
    for (const char* type : {"A1", "A2"}) {
        CurrentStock s = current_stock(type, 7, 8);
        std::vector<FinModule> mods;
        for (const auto& w : s.labels) mods.push_back(pullback(evaluation_module(s.g, lab(w)), s.ev));
        for (std::size_t i = 0; i < s.labels.size(); ++i)
            for (std::size_t j = 0; j < s.labels.size(); ++j) {
                const long oracle = static_cast<long>(ext1_dim(s.l, mods[i], mods[j]));
                const long formula = prop_current(s, s.labels[i], s.labels[j]);
                o.expect(oracle == formula, [&] {
                    return std::string(type) + " " + w2s(s.labels[i]) + "->" + w2s(s.labels[j]) +
                           ": oracle " + std::to_string(oracle) + " formula " + std::to_string(formula);
                });
            }
    }
    return o;
}

Outcome criterion_kunneth() {
    Outcome o;
    std::mt19937 rng(20261018);
    std::vector<CurrentStock> stock{current_stock("A1", 3, 4), current_stock("A2", 1, 3)};
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
    for (int trial = 0; trial < 20; ++trial) {
        const CurrentStock& s1 = stock[pick(stock.size())];
        const CurrentStock& s2 = stock[pick(stock.size())];
        const Weight u1 = s1.labels[pick(s1.labels.size())], v1 = s1.labels[pick(s1.labels.size())];
        const Weight u2 = s2.labels[pick(s2.labels.size())], v2 = s2.labels[pick(s2.labels.size())];

        FinDimLie l = direct_sum(s1.l, s2.l);
        FinModule a = external_tensor(pullback(evaluation_module(s1.g, lab(u1)), s1.ev),
                                      pullback(evaluation_module(s2.g, lab(u2)), s2.ev));
        FinModule b = external_tensor(pullback(evaluation_module(s1.g, lab(v1)), s1.ev),
                                      pullback(evaluation_module(s2.g, lab(v2)), s2.ev));
        const long oracle = static_cast<long>(ext1_dim(l, a, b));

        KunnethSide k1, k2;
        k1.ext.add("first factor", prop_current(s1, u1, v1));
        k1.isomorphic = u1 == v1;
        k2.ext.add("second factor", prop_current(s2, u2, v2));
        k2.isomorphic = u2 == v2;
        const ExtResult formula = kunneth_ext(k1, k2);
        o.expect(formula.infinite_summands.empty() && formula.finite_dim == oracle, [&] {
            return s1.cd->key() + " " + w2s(u1) + "->" + w2s(v1) + " with " + s2.cd->key() + " " + w2s(u2) + "->" +
                   w2s(v2) + ": oracle " + std::to_string(oracle) + " formula " + format_ext(formula);
        });
    }
    return o;
}

FinDimLie structure(std::size_t dim, const std::vector<std::tuple<int, int, int, int>>& brackets) {
    FinDimLie l(dim);
    for (auto [i, j, k, c] : brackets) l.set_bracket(i, j, SparseVec{{static_cast<std::size_t>(k), Rat(c)}});
    return l;
}

Outcome criterion_two_path() {
    Outcome o;
    std::vector<std::pair<std::string, FinDimLie>> algebras;
    for (std::size_t n = 1; n <= 3; ++n) algebras.emplace_back("abelian k^" + std::to_string(n), FinDimLie(n));
    algebras.emplace_back("ax+b", structure(2, {{0, 1, 1, 1}}));
    algebras.emplace_back("heisenberg3", structure(3, {{0, 1, 2, 1}}));
    algebras.emplace_back("heisenberg5", structure(5, {{0, 1, 4, 1}, {2, 3, 4, 1}}));
    algebras.emplace_back("ax+b current", truncated_current(structure(2, {{0, 1, 1, 1}}), 3));
    algebras.emplace_back("diagonal extension of k^2", structure(3, {{0, 1, 1, 2}, {0, 2, 2, 1}}));
    algebras.emplace_back("onsager quotient x=1", build_onsager_quotient(builtin_onsager_sl2(), Rat(1)).lie);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const auto& [name, l] = algebras[trial % algebras.size()];
        const auto lambda = emext::testing::random_character_on_abelianization(rng, l);
        const long direct = static_cast<long>(h1_dim(l, one_dim_module(l, lambda)));
        const long via_k = static_cast<long>(h1_onedim_via_Klambda(l, lambda));
        o.expect(direct == via_k, [&] {
            return name + ": h1 " + std::to_string(direct) + " via K_lambda " + std::to_string(via_k);
        });
    }
    return o;
}

Outcome criterion_onsager() {
    Outcome o;
    const OnsagerPair pair = builtin_onsager_sl2();
    const OnsagerQuotient q = build_onsager_quotient(pair, Rat(1));
    auto k = [&](const Rat& a) {
        RatMatrix act(1, 1);
        act(0, 0) = a * pair.rho_value;
        return pullback(FinModule{1, {act}}, q.evaluation);
    };
    const std::vector<Rat> charges{Rat(-2), Rat(-1), Rat(0), Rat(1, 2), Rat(1), Rat(3, 2), Rat(2)};
    for (const auto& a : charges)
        for (const auto& b : charges) {
            const Rat diff = abs(Rat(a - b));
            const long expected = diff == 0 ? 2 : (diff == 1 ? 1 : 0);
            const long oracle = static_cast<long>(ext1_dim(q.lie, k(a), k(b)));
            o.expect(oracle == expected, [&] {
                return "Ext(k_" + a.get_str() + ", k_" + b.get_str() + ") oracle " + std::to_string(oracle) +
                       " expected " + std::to_string(expected);
            });
        }
    std::vector<Rat> lambda(q.lie.dim());
    for (std::size_t j = 0; j < lambda.size(); ++j) lambda[j] = pair.rho_value * q.evaluation(0, j);
    const long h1 = static_cast<long>(h1_onedim_via_Klambda(q.lie, lambda));
    o.expect(h1 == 1, [&] { return "H^1(M, k_rho) via K_lambda = " + std::to_string(h1); });
    return o;
}

Outcome criterion_exchange() {
    Outcome o;
    MatrixLie s = builtin_simple("A1");
    auto cd = cartan_data("A1");
    for (std::size_t d : {1u, 2u}) {
        Document doc = load_document("algebra { family = exchange; s = \"A1\" }\npoint \"x\" { fixed = true; tangent_dim = " +
                                     std::to_string(d) + " }\n");
        const PointSpec& x = doc.algebra.point("x");
        ExchangeQuotient q = build_exchange_quotient(s.lie, true, d);
        for (long a = 0; a <= 3; ++a)
            for (long b = 0; b <= 3; ++b) {
                const long oracle = static_cast<long>(ext1_dim(q.lie, pullback(evaluation_module(s, lab({a})), q.evaluation),
                                                              pullback(evaluation_module(s, lab({b})), q.evaluation)));
                const ExtResult f = single_point_ext(doc.algebra, x, lab({a}), lab({b}));
                o.expect(f.infinite_summands.empty() && f.finite_dim == oracle, [&] {
                    return "tangent_dim " + std::to_string(d) + " (" + std::to_string(a) + ")->(" + std::to_string(b) +
                           "): oracle " + std::to_string(oracle) + " formula " + format_ext(f);
                });
            }
    }
    return o;
}

Outcome criterion_chains() {
    Outcome o;
    auto cd = cartan_data("A2");
    const LatticeSubgroup q = root_lattice(*cd);
    ModuleExpr adjoint = adjoint_module(*cd);
    ModuleExpr fundamentals;
    fundamentals.add(lab({1, 0}), 1);
    fundamentals.add(lab({0, 1}), 1);
    std::vector<Weight> box;
    for (long i = 0; i <= 3; ++i)
        for (long j = 0; j <= 3; ++j) box.push_back({i, j});
    for (const auto& lambda : box)
        for (const auto& mu : box) {
            const Weight diff{mu[0] - lambda[0], mu[1] - lambda[1]};
            const bool in_q = lattice_contains(q, std::span<const long>(diff));
            const bool adj = chain_reachable(*cd, adjoint, lambda, mu, 12);
            const bool fund = chain_reachable(*cd, fundamentals, lambda, mu, 12);
            o.expect(adj == in_q && fund, [&] {
                return w2s(lambda) + "->" + w2s(mu) + ": adjoint " + std::to_string(adj) + " (in Q " +
                       std::to_string(in_q) + "), fundamentals " + std::to_string(fund);
            });
        }
    return o;
}

Outcome criterion_block_counts() {
    Outcome o;
    const std::vector<std::pair<std::string, std::size_t>> expected{{"A1", 2}, {"A2", 3}, {"G2", 1}, {"D4", 4}};
    for (const auto& [type, per_point] : expected) {
        Document doc = load_document("algebra { family = multiloop; g = \"" + type +
                                     "\"; n = 1 }\npoint \"p1\" {}\npoint \"p2\" {}\n");
        const std::size_t one = enumerate_blocks(doc.algebra, {"p1"}).size();
        const std::size_t two = enumerate_blocks(doc.algebra, {"p1", "p2"}).size();
        o.expect(one == per_point && two == per_point * per_point, [&] {
            return type + ": " + std::to_string(one) + " and " + std::to_string(two) + " characters";
        });
    }
    Document ons = load_document("algebra { family = onsager; g = \"A1\" }\npoint \"x\" { fixed = true; param = 1 }\n");
    bool nonfinite = false;
    try {
        enumerate_blocks(ons.algebra, {"x"});
    } catch (const Error& e) {
        nonfinite = e.code() == ErrorCode::nonfinite;
    }
    o.expect(nonfinite, [] { return std::string("onsager fixed point did not report nonfinite"); });
    return o;
}

Outcome criterion_characters() {
    Outcome o;
    std::mt19937 rng(42);
    const std::vector<std::string> rank3{"A1", "A2", "B2", "G2", "A3", "B3", "C3", "A1xA2"};
    auto pick_type = [&](const std::vector<std::string>& types) {
        return types[std::uniform_int_distribution<std::size_t>(0, types.size() - 1)(rng)];
    };
    for (int t = 0; t < 30; ++t) {
        auto cd = cartan_data(pick_type(rank3));
        const Weight l = emext::testing::random_weight(rng, cd->rank(), 3);
        Int total = 0;
        for (const auto& [w, m] : weight_multiplicities(*cd, l)) total += m;
        o.expect(total == dim(*cd, l), [&] { return "Freudenthal total for " + cd->key() + " " + w2s(l); });
    }
    for (int t = 0; t < 30; ++t) {
        auto cd = cartan_data(pick_type(rank3));
        const Weight l = emext::testing::random_weight(rng, cd->rank(), 2);
        const Weight m = emext::testing::random_weight(rng, cd->rank(), 2);
        o.expect(dim(*cd, tensor_decompose(*cd, l, m)) == dim(*cd, l) * dim(*cd, m),
                 [&] { return "dimension balance for " + cd->key() + " " + w2s(l) + " x " + w2s(m); });
    }
    for (const char* type : {"A1", "A2", "B2", "G2", "A1xA1"}) {
        auto cd = cartan_data(type);
        const auto labels = emext::testing::small_dominant_weights(*cd, 6, 64);
        for (const auto& l : labels)
            for (const auto& m : labels) {
                if (dim(*cd, l) * dim(*cd, m) > 512) continue;
                const ModuleExpr klimyk = tensor_decompose(*cd, l, m);
                const ModuleExpr brute =
                    emext::testing::strip_character(*cd, emext::testing::product_character(*cd, l, m));
                o.expect(klimyk.terms == brute.terms, [&] {
                    return std::string(type) + " " + w2s(l) + " x " + w2s(m) + ": Klimyk " + format_module(klimyk) +
                           " stripping " + format_module(brute);
                });
            }
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"untwisted current algebra: oracle equals tangent_dim * Hom_g(g, V* (x) V')", criterion_untwisted},
        {"Kunneth case table on direct sums of current algebras", criterion_kunneth},
        {"one-dimensional H^1 via K_lambda equals direct H^1", criterion_two_path},
        {"Onsager sl2 at x = 1: Ext table of k_a and H^1(M, k_rho) = 1", criterion_onsager},
        {"exchange fixed point: formula equals oracle, tangent_dim 1 and 2", criterion_exchange},
        {"A2 chain reachability in the box [0,3]^2", criterion_chains},
        {"multiloop block counts and Onsager nonfinite report", criterion_block_counts},
        {"character engine: Freudenthal, Klimyk balance, Klimyk vs stripping", criterion_characters},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.first_failure = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line << (o.pass ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].first << " (" << o.checked
             << " checks, " << static_cast<long>(secs * 1000) << " ms)";
        if (!o.pass) line << ": " << o.first_failure;
        std::cout << line.str() << std::endl;
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
