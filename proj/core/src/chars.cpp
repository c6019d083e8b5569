#include "emext/chars.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <sstream>

namespace emext {

bool IrrepLabel::is_trivial() const {
    return std::all_of(highest_weight.begin(), highest_weight.end(), [](long x) { return x == 0; }) &&
           std::all_of(charges.begin(), charges.end(), [](const Rat& c) { return sgn(c) == 0; });
}

void ModuleExpr::add(const IrrepLabel& label, long mult) {
    if (mult == 0) return;
    long& m = terms[label];
    m += mult;
    if (m == 0) terms.erase(label);
}

void ModuleExpr::add(const ModuleExpr& other, long mult) {
    for (const auto& [label, m] : other.terms) add(label, m * mult);
}

long ModuleExpr::multiplicity(const IrrepLabel& label) const {
    auto it = terms.find(label);
    return it == terms.end() ? 0 : it->second;
}

std::string format_charges(const std::vector<Rat>& charges) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < charges.size(); ++i) os << (i ? "," : "") << charges[i];
    os << ']';
    return os.str();
}

std::string format_label(const IrrepLabel& label) {
    std::string out = "V" + format_weight(label.highest_weight);
    if (!label.charges.empty()) out += format_charges(label.charges);
    return out;
}

std::string format_module(const ModuleExpr& m) {
    if (m.terms.empty()) return "0";
    std::string out;
    for (const auto& [label, mult] : m.terms) {
        if (!out.empty()) out += " + ";
        if (mult != 1) out += std::to_string(mult) + "*";
        out += format_label(label);
    }
    return out;
}

void check_label(const CartanData& cd, const IrrepLabel& v, std::size_t abelian_rank) {
    cd.check_weight(v.highest_weight);
    if (!is_dominant(v.highest_weight))
        throw Error(ErrorCode::not_dominant, "highest weight " + format_weight(v.highest_weight) + " is not dominant");
    if (v.charges.size() != abelian_rank)
        throw Error(ErrorCode::dimension_mismatch,
                    "label " + format_label(v) + " carries " + std::to_string(v.charges.size()) +
                        " charges, expected " + std::to_string(abelian_rank));
}

namespace {

void require_dominant(const CartanData& cd, const Weight& lambda) {
    cd.check_weight(lambda);
    if (!is_dominant(lambda))
        throw Error(ErrorCode::not_dominant, format_weight(lambda) + " is not dominant");
}

Weight add(const Weight& a, const Weight& b) {
    Weight c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

bool has_zero(const Weight& w) { return std::find(w.begin(), w.end(), 0L) != w.end(); }

struct DominantEntry {
    Weight mu;
    std::vector<long> depth;  // lambda - mu in simple-root coordinates
    long level = 0;
};

WeightMultiset freudenthal(const CartanData& cd, const Weight& lambda) {
    const std::size_t r = cd.rank();
    std::vector<Weight> roots_w;
    for (const auto& a : cd.positive_roots()) roots_w.push_back(cd.root_to_weight(a));

    // dominant weights below lambda, found by subtracting positive roots
    std::map<Weight, std::vector<long>> depth_of{{lambda, std::vector<long>(r, 0)}};
    std::deque<Weight> queue{lambda};
    while (!queue.empty()) {
        Weight mu = queue.front();
        queue.pop_front();
        const auto depth = depth_of[mu];
        for (std::size_t k = 0; k < roots_w.size(); ++k) {
            Weight nu(r);
            for (std::size_t i = 0; i < r; ++i) nu[i] = mu[i] - roots_w[k][i];
            if (!is_dominant(nu) || depth_of.count(nu)) continue;
            auto d = depth;
            for (std::size_t i = 0; i < r; ++i) d[i] += cd.positive_roots()[k][i];
            depth_of.emplace(nu, std::move(d));
            queue.push_back(std::move(nu));
        }
    }
    std::vector<DominantEntry> order;
    for (auto& [mu, d] : depth_of) {
        long level = 0;
        for (long x : d) level += x;
        order.push_back({mu, d, level});
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const DominantEntry& a, const DominantEntry& b) { return a.level < b.level; });

    WeightMultiset mult;
    const Weight shift = add(lambda, add(cd.rho(), cd.rho()));
    for (const auto& e : order) {
        if (e.level == 0) {
            mult[e.mu] = 1;
            continue;
        }
        // 2 diff = sum_j r_j (lambda + mu + 2 rho)_j B_jj
        Int diff2 = 0;
        for (std::size_t j = 0; j < r; ++j) diff2 += Int(e.depth[j]) * (shift[j] + e.mu[j]) * cd.gram(j, j);
        Int s = 0;
        for (std::size_t k = 0; k < roots_w.size(); ++k) {
            const auto& alpha = cd.positive_roots()[k];
            Weight nu = e.mu;
            for (;;) {
                for (std::size_t i = 0; i < r; ++i) nu[i] += roots_w[k][i];
                Weight dom = dominant_reduce(cd, nu).dominant;
                auto it = mult.find(dom);
                if (it == mult.end()) break;
                long pair2 = 0;  // 2 (nu, alpha)
                for (std::size_t j = 0; j < r; ++j) pair2 += alpha[j] * nu[j] * cd.gram(j, j);
                s += Int(it->second) * pair2;
            }
        }
        Int num = 2 * s;
        if (sgn(diff2) <= 0 || !mpz_divisible_p(num.get_mpz_t(), diff2.get_mpz_t()))
            throw Error(ErrorCode::inconsistent, "Freudenthal recursion produced a non-integer multiplicity");
        Int m = num / diff2;
        if (sgn(m) > 0) mult[e.mu] = m.get_si();
    }
    return mult;
}

struct CacheKey {
    std::string system;
    Weight lambda;
    friend bool operator<(const CacheKey& a, const CacheKey& b) {
        if (a.system != b.system) return a.system < b.system;
        return a.lambda < b.lambda;
    }
};

std::shared_mutex cache_mutex;
std::map<CacheKey, std::unique_ptr<const WeightMultiset>> cache;

}  // namespace

const WeightMultiset& dominant_multiplicities(const CartanData& cd, const Weight& lambda) {
    require_dominant(cd, lambda);
    CacheKey key{cd.key(), lambda};
    {
        std::shared_lock lock(cache_mutex);
        if (auto it = cache.find(key); it != cache.end()) return *it->second;
    }
    auto computed = std::make_unique<const WeightMultiset>(freudenthal(cd, lambda));
    std::unique_lock lock(cache_mutex);
    auto [it, inserted] = cache.emplace(std::move(key), std::move(computed));
    return *it->second;
}

WeightMultiset weight_multiplicities(const CartanData& cd, const Weight& lambda) {
    WeightMultiset out;
    for (const auto& [mu, m] : dominant_multiplicities(cd, lambda)) {
        std::set<Weight> orbit{mu};
        std::vector<Weight> stack{mu};
        while (!stack.empty()) {
            Weight w = std::move(stack.back());
            stack.pop_back();
            for (std::size_t i = 0; i < cd.rank(); ++i) {
                if (w[i] <= 0) continue;
                Weight s = reflect(cd, w, i);
                if (orbit.insert(s).second) stack.push_back(std::move(s));
            }
        }
        for (const auto& w : orbit) out[w] = m;
    }
    return out;
}

WeightMultiset module_weights(const CartanData& cd, const ModuleExpr& m) {
    WeightMultiset out;
    for (const auto& [label, mult] : m.terms)
        for (const auto& [w, k] : weight_multiplicities(cd, label.highest_weight)) out[w] += k * mult;
    return out;
}

Int dim(const CartanData& cd, const Weight& lambda) {
    require_dominant(cd, lambda);
    Weight shifted = add(lambda, cd.rho());
    Rat d = 1;
    for (const auto& alpha : cd.positive_roots())
        d *= cd.coroot_pairing(shifted, alpha) / cd.coroot_pairing(cd.rho(), alpha);
    if (d.get_den() != 1) throw Error(ErrorCode::inconsistent, "Weyl dimension formula gave a non-integer");
    return d.get_num();
}

Int dim(const CartanData& cd, const ModuleExpr& m) {
    Int total = 0;
    for (const auto& [label, mult] : m.terms) total += mult * dim(cd, label.highest_weight);
    return total;
}

namespace {

std::map<Weight, long> klimyk(const CartanData& cd, const Weight& lambda, const Weight& mu) {
    require_dominant(cd, lambda);
    require_dominant(cd, mu);
    std::map<Weight, long> acc;
    const Weight base = add(lambda, cd.rho());
    for (const auto& [xi, m] : weight_multiplicities(cd, mu)) {
        Reduction red = dominant_reduce(cd, add(base, xi));
        if (red.singular || has_zero(red.dominant)) continue;
        Weight hw = red.dominant;
        for (std::size_t i = 0; i < hw.size(); ++i) hw[i] -= 1;
        acc[hw] += red.parity * m;
    }
    for (auto it = acc.begin(); it != acc.end();) {
        if (it->second < 0)
            throw Error(ErrorCode::inconsistent, "Brauer-Klimyk produced a negative multiplicity");
        it = it->second == 0 ? acc.erase(it) : std::next(it);
    }
    return acc;
}

}  // namespace

ModuleExpr tensor_decompose(const CartanData& cd, const Weight& lambda, const Weight& mu) {
    ModuleExpr out;
    for (auto& [hw, m] : klimyk(cd, lambda, mu)) out.add(IrrepLabel{hw, {}}, m);
    return out;
}

ModuleExpr tensor_decompose(const CartanData& cd, const IrrepLabel& a, const IrrepLabel& b) {
    if (a.charges.size() != b.charges.size())
        throw Error(ErrorCode::dimension_mismatch, "tensor_decompose: charge vectors differ in length");
    std::vector<Rat> charges(a.charges.size());
    for (std::size_t i = 0; i < charges.size(); ++i) charges[i] = a.charges[i] + b.charges[i];
    ModuleExpr out;
    for (auto& [hw, m] : klimyk(cd, a.highest_weight, b.highest_weight)) out.add(IrrepLabel{hw, charges}, m);
    return out;
}

ModuleExpr tensor_product(const CartanData& cd, const ModuleExpr& a, const ModuleExpr& b) {
    ModuleExpr out;
    for (const auto& [la, ma] : a.terms)
        for (const auto& [lb, mb] : b.terms) out.add(tensor_decompose(cd, la, lb), ma * mb);
    return out;
}

long tensor_multiplicity(const CartanData& cd, const Weight& lambda, const Weight& mu, const Weight& nu) {
    require_dominant(cd, nu);
    auto acc = klimyk(cd, lambda, mu);
    auto it = acc.find(nu);
    return it == acc.end() ? 0 : it->second;
}

long hom_dim(const CartanData& cd, const ModuleExpr& u, const IrrepLabel& v, const IrrepLabel& w) {
    const std::size_t ab = v.charges.size();
    check_label(cd, v, ab);
    check_label(cd, w, ab);
    long total = 0;
    for (const auto& [t, m] : u.terms) {
        check_label(cd, t, ab);
        bool charges_match = true;
        for (std::size_t i = 0; i < ab && charges_match; ++i)
            charges_match = t.charges[i] + v.charges[i] == w.charges[i];
        if (!charges_match) continue;
        total += m * tensor_multiplicity(cd, t.highest_weight, v.highest_weight, w.highest_weight);
    }
    return total;
}

IrrepLabel dual_label(const CartanData& cd, const IrrepLabel& v) {
    IrrepLabel out{dual_weight(cd, v.highest_weight), v.charges};
    for (auto& c : out.charges) c = -c;
    return out;
}

ModuleExpr dual_module(const CartanData& cd, const ModuleExpr& m) {
    ModuleExpr out;
    for (const auto& [label, mult] : m.terms) out.add(dual_label(cd, label), mult);
    return out;
}

IrrepLabel trivial_label(const CartanData& cd, std::size_t abelian_rank) {
    return IrrepLabel{Weight(cd.rank(), 0), std::vector<Rat>(abelian_rank)};
}

ModuleExpr adjoint_module(const CartanData& cd, std::size_t abelian_rank) {
    ModuleExpr out;
    for (auto& theta : cd.highest_roots()) out.add(IrrepLabel{theta, std::vector<Rat>(abelian_rank)});
    if (abelian_rank > 0) out.add(trivial_label(cd, abelian_rank), static_cast<long>(abelian_rank));
    return out;
}

}  // namespace emext
