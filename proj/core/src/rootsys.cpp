#include "emext/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace emext {

// ---------------------------------------------------------------------------
// Spec parsing

RootSystemSpec RootSystemSpec::parse(std::string_view text) {
    RootSystemSpec spec;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos == text.size()) return spec;
    for (;;) {
        skip_ws();
        if (pos == text.size() || !std::isupper(static_cast<unsigned char>(text[pos])))
            throw Error(ErrorCode::invalid_input, "root system: expected a type letter in '" + std::string(text) + "'");
        SimpleComponent c;
        c.type = text[pos++];
        const char* first = text.data() + pos;
        auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), c.rank);
        if (ec != std::errc() || ptr == first)
            throw Error(ErrorCode::invalid_input, "root system: expected a rank in '" + std::string(text) + "'");
        pos += static_cast<std::size_t>(ptr - first);
        spec.components.push_back(c);
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != 'x' && text[pos] != '+')
            throw Error(ErrorCode::invalid_input, "root system: components are joined by 'x'");
        ++pos;
    }
    spec.validate();
    return spec;
}

std::string RootSystemSpec::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i) out += 'x';
        out += components[i].type;
        out += std::to_string(components[i].rank);
    }
    return out;
}

std::size_t RootSystemSpec::rank() const {
    std::size_t r = 0;
    for (const auto& c : components) r += static_cast<std::size_t>(c.rank);
    return r;
}

void RootSystemSpec::validate() const {
    for (const auto& c : components) {
        const std::string name = std::string(1, c.type) + std::to_string(c.rank);
        bool ok = false;
        switch (c.type) {
        case 'A': ok = c.rank >= 1; break;
        case 'B': ok = c.rank >= 2; break;
        case 'C': ok = c.rank >= 2; break;
        case 'D': ok = c.rank >= 3; break;
        case 'E': ok = c.rank >= 6 && c.rank <= 8; break;
        case 'F': ok = c.rank == 4; break;
        case 'G': ok = c.rank == 2; break;
        default: break;
        }
        if (!ok) throw Error(ErrorCode::invalid_input, "invalid root system component " + name);
    }
}

// ---------------------------------------------------------------------------
// Type tables

namespace {

// Gram matrix of the simple roots of one simple component, Bourbaki numbering.
std::vector<long> component_gram(const SimpleComponent& c) {
    const std::size_t n = static_cast<std::size_t>(c.rank);
    std::vector<long> b(n * n, 0);
    auto set = [&](std::size_t i, std::size_t j, long v) {  // 1-based
        b[(i - 1) * n + (j - 1)] = v;
        b[(j - 1) * n + (i - 1)] = v;
    };
    auto chain = [&](std::size_t from, std::size_t to, long len, long link) {
        for (std::size_t i = from; i <= to; ++i) set(i, i, len);
        for (std::size_t i = from; i < to; ++i) set(i, i + 1, link);
    };
    switch (c.type) {
    case 'A': chain(1, n, 2, -1); break;
    case 'B':
        chain(1, n, 4, -2);
        set(n, n, 2);
        break;
    case 'C':
        chain(1, n, 2, -1);
        set(n, n, 4);
        set(n - 1, n, -2);
        break;
    case 'D':
        chain(1, n - 1, 2, -1);
        set(n, n, 2);
        set(n - 2, n, -1);
        break;
    case 'E':
        for (std::size_t i = 1; i <= n; ++i) set(i, i, 2);
        set(1, 3, -1);
        set(2, 4, -1);
        for (std::size_t i = 3; i < n; ++i) set(i, i + 1, -1);
        break;
    case 'F':
        set(1, 1, 4);
        set(2, 2, 4);
        set(3, 3, 2);
        set(4, 4, 2);
        set(1, 2, -2);
        set(2, 3, -2);
        set(3, 4, -1);
        break;
    case 'G':
        set(1, 1, 2);
        set(2, 2, 6);
        set(1, 2, -3);
        break;
    default: throw Error(ErrorCode::invalid_input, "unknown root system type");
    }
    return b;
}

// Positive roots of a component by root-string closure, in local simple-root coordinates.
std::vector<std::vector<long>> component_roots(std::size_t n, const std::vector<long>& cartan) {
    std::set<std::vector<long>> known;
    std::vector<std::vector<long>> level;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<long> r(n, 0);
        r[i] = 1;
        level.push_back(r);
        known.insert(r);
    }
    std::vector<std::vector<long>> all = level;
    while (!level.empty()) {
        std::vector<std::vector<long>> next;
        for (const auto& beta : level) {
            for (std::size_t i = 0; i < n; ++i) {
                // q: how far down the alpha_i string through beta goes
                long q = 0;
                for (;;) {
                    auto down = beta;
                    down[i] -= q + 1;
                    if (down[i] < 0 || !known.count(down)) break;
                    ++q;
                }
                long pairing = 0;
                for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * cartan[i * n + j];
                if (q - pairing <= 0) continue;
                auto up = beta;
                up[i] += 1;
                if (known.insert(up).second) next.push_back(up);
            }
        }
        all.insert(all.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return all;
}

}  // namespace

CartanData build(const RootSystemSpec& spec) {
    spec.validate();
    CartanData cd;
    cd.spec_ = spec;
    cd.key_ = spec.to_string();
    cd.rank_ = spec.rank();
    const std::size_t r = cd.rank_;
    cd.gram_.assign(r * r, 0);
    cd.cartan_small_.assign(r * r, 0);

    std::size_t offset = 0;
    for (const auto& c : spec.components) {
        const std::size_t n = static_cast<std::size_t>(c.rank);
        auto b = component_gram(c);
        std::vector<long> local(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                local[i * n + j] = 2 * b[i * n + j] / b[i * n + i];
                cd.gram_[(offset + i) * r + offset + j] = b[i * n + j];
                cd.cartan_small_[(offset + i) * r + offset + j] = local[i * n + j];
            }
        for (auto& root : component_roots(n, local)) {
            std::vector<long> full(r, 0);
            std::copy(root.begin(), root.end(), full.begin() + static_cast<std::ptrdiff_t>(offset));
            cd.positive_roots_.push_back(std::move(full));
        }
        cd.bounds_.emplace_back(offset, offset + n);
        offset += n;
    }
    cd.cartan_ = IntMatrix(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) cd.cartan_(i, j) = cd.cartan_small_[i * r + j];
    cd.rho_.assign(r, 1);
    cd.inverse_cartan_ = r ? rational_inverse(to_rational(cd.cartan_)) : RatMatrix();
    return cd;
}

std::shared_ptr<const CartanData> cartan_data(const RootSystemSpec& spec) {
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const CartanData>> cache;
    const std::string key = spec.to_string();
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto built = std::make_shared<const CartanData>(build(spec));
    std::lock_guard lock(mu);
    return cache.emplace(key, std::move(built)).first->second;
}

std::shared_ptr<const CartanData> cartan_data(std::string_view spec_text) {
    return cartan_data(RootSystemSpec::parse(spec_text));
}

void CartanData::check_weight(const Weight& w) const {
    if (w.size() != rank_)
        throw Error(ErrorCode::dimension_mismatch,
                    "weight " + format_weight(w) + " has length " + std::to_string(w.size()) +
                        ", root system " + (key_.empty() ? "(rank 0)" : key_) + " has rank " +
                        std::to_string(rank_));
}

Weight CartanData::root_to_weight(const std::vector<long>& root) const {
    Weight w(rank_, 0);
    for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = 0; j < rank_; ++j) w[i] += cartan_small_[i * rank_ + j] * root[j];
    return w;
}

std::vector<Weight> CartanData::highest_roots() const {
    std::vector<Weight> out;
    for (const auto& [lo, hi] : bounds_) {
        const std::vector<long>* best = nullptr;
        long best_height = -1;
        for (const auto& root : positive_roots_) {
            bool inside = true;
            long h = 0;
            for (std::size_t j = 0; j < rank_; ++j) {
                if (root[j] != 0 && (j < lo || j >= hi)) inside = false;
                h += root[j];
            }
            if (inside && h > best_height) {
                best_height = h;
                best = &root;
            }
        }
        out.push_back(root_to_weight(*best));
    }
    return out;
}

Rat CartanData::coroot_pairing(const Weight& nu, const std::vector<long>& alpha) const {
    long num = 0;
    long len = 0;
    for (std::size_t j = 0; j < rank_; ++j) {
        num += alpha[j] * nu[j] * gram_[j * rank_ + j];
        for (std::size_t k = 0; k < rank_; ++k) len += alpha[j] * gram_[j * rank_ + k] * alpha[k];
    }
    Rat out(num, len);
    out.canonicalize();
    return out;
}

Rat CartanData::height(const Weight& w) const {
    Rat h = 0;
    for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = 0; j < rank_; ++j) h += inverse_cartan_(i, j) * w[j];
    return h;
}

// ---------------------------------------------------------------------------
// Weyl group walks

bool is_dominant(const Weight& w) {
    return std::all_of(w.begin(), w.end(), [](long x) { return x >= 0; });
}

Weight reflect(const CartanData& cd, const Weight& w, std::size_t i) {
    Weight out = w;
    const long c = w[i];
    for (std::size_t k = 0; k < cd.rank(); ++k) out[k] -= c * cd.cartan_at(k, i);
    return out;
}

Reduction dominant_reduce(const CartanData& cd, Weight w) {
    cd.check_weight(w);
    Reduction red;
    std::size_t steps = 0;
    for (;;) {
        auto it = std::find_if(w.begin(), w.end(), [](long x) { return x < 0; });
        if (it == w.end()) break;
        const std::size_t i = static_cast<std::size_t>(it - w.begin());
        const long c = w[i];
        for (std::size_t k = 0; k < cd.rank(); ++k) w[k] -= c * cd.cartan_at(k, i);
        ++steps;
    }
    red.parity = steps % 2 ? -1 : 1;
    red.singular = steps > 0 && std::find(w.begin(), w.end(), 0L) != w.end();
    red.dominant = std::move(w);
    return red;
}

Weight dual_weight(const CartanData& cd, const Weight& lambda) {
    cd.check_weight(lambda);
    if (!is_dominant(lambda))
        throw Error(ErrorCode::not_dominant, "dual_weight: " + format_weight(lambda) + " is not dominant");
    Weight neg(lambda.size());
    std::transform(lambda.begin(), lambda.end(), neg.begin(), [](long x) { return -x; });
    return dominant_reduce(cd, std::move(neg)).dominant;
}

LatticeSubgroup root_lattice(const CartanData& cd) {
    return LatticeSubgroup(cd.rank(), cd.cartan().transpose());
}

LatticeSubgroup span_of_weights(const CartanData& cd, const std::vector<Weight>& weights) {
    IntMatrix g(weights.size(), cd.rank());
    for (std::size_t i = 0; i < weights.size(); ++i) {
        cd.check_weight(weights[i]);
        for (std::size_t j = 0; j < cd.rank(); ++j) g(i, j) = weights[i][j];
    }
    return LatticeSubgroup(cd.rank(), std::move(g));
}

std::string format_weight(const Weight& w) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ')';
    return os.str();
}

Weight parse_weight(std::string_view text) {
    Weight w;
    std::string cleaned;
    for (char ch : text)
        if (ch != '[' && ch != ']' && ch != '(' && ch != ')' && !std::isspace(static_cast<unsigned char>(ch)))
            cleaned += ch;
    if (cleaned.empty()) return w;
    std::size_t pos = 0;
    while (pos <= cleaned.size()) {
        std::size_t comma = cleaned.find(',', pos);
        if (comma == std::string::npos) comma = cleaned.size();
        long v = 0;
        const char* first = cleaned.data() + pos;
        const char* last = cleaned.data() + comma;
        if (first != last && *first == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last || first == last)
            throw Error(ErrorCode::invalid_input, "malformed weight '" + std::string(text) + "'");
        w.push_back(v);
        pos = comma + 1;
    }
    return w;
}

}  // namespace emext
