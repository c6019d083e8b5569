#include "support.hpp"

#include <functional>

namespace emext::testing {

ModuleExpr strip_character(const CartanData& cd, WeightMultiset chi) {
    ModuleExpr out;
    while (!chi.empty()) {
        auto top = chi.begin();
        for (auto it = chi.begin(); it != chi.end(); ++it)
            if (cd.height(it->first) > cd.height(top->first)) top = it;
        const Weight hw = top->first;
        const long mult = top->second;
        if (!is_dominant(hw) || mult < 0) throw Error(ErrorCode::inconsistent, "character is not a genuine module");
        out.add(IrrepLabel{hw, {}}, mult);
        for (const auto& [w, m] : weight_multiplicities(cd, hw)) {
            auto it = chi.find(w);
            if (it == chi.end()) throw Error(ErrorCode::inconsistent, "character is not a genuine module");
            it->second -= mult * m;
            if (it->second == 0) chi.erase(it);
        }
    }
    return out;
}

WeightMultiset product_character(const CartanData& cd, const Weight& lambda, const Weight& mu) {
    WeightMultiset out;
    const auto a = weight_multiplicities(cd, lambda);
    const auto b = weight_multiplicities(cd, mu);
    for (const auto& [wa, ma] : a)
        for (const auto& [wb, mb] : b) {
            Weight w(wa.size());
            for (std::size_t i = 0; i < w.size(); ++i) w[i] = wa[i] + wb[i];
            out[w] += ma * mb;
        }
    return out;
}

std::vector<Weight> small_dominant_weights(const CartanData& cd, long bound, long max_dim) {
    std::vector<Weight> out;
    Weight w(cd.rank(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == w.size()) {
            if (dim(cd, w) <= max_dim) out.push_back(w);
            return;
        }
        for (long c = 0; c <= bound; ++c) {
            w[i] = c;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

Weight random_weight(std::mt19937& rng, std::size_t rank, long max_coord) {
    std::uniform_int_distribution<long> d(0, max_coord);
    Weight w(rank);
    for (auto& c : w) c = d(rng);
    return w;
}

RatMatrix current_evaluation(std::size_t dim_g) {
    RatMatrix e(dim_g, 2 * dim_g);
    for (std::size_t a = 0; a < dim_g; ++a) e(a, a) = 1;
    return e;
}

std::vector<Rat> random_character_on_abelianization(std::mt19937& rng, const FinDimLie& l) {
    const std::size_t n = l.dim();
    std::vector<std::vector<Rat>> rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<Rat> r(n);
            for (const auto& [k, c] : l.bracket(i, j)) r[k] = c;
            rows.push_back(std::move(r));
        }
    RatMatrix derived(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t k = 0; k < n; ++k) derived(i, k) = rows[i][k];
    std::vector<Rat> lambda(n);
    std::uniform_int_distribution<long> coef(-3, 3);
    for (const auto& v : rational_nullspace(derived)) {
        const long c = coef(rng);
        for (std::size_t k = 0; k < n; ++k) lambda[k] += c * v[k];
    }
    return lambda;
}

}  // namespace emext::testing
