#include <algorithm>
#include <map>
#include <set>

#include "emext/oracle.hpp"

namespace emext {

namespace {

bool insert_dense(SparseEchelon& ech, const std::vector<Rat>& v) {
    std::vector<std::pair<std::size_t, Rat>> row;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) row.emplace_back(i, v[i]);
    return !row.empty() && ech.insert_rational(row);
}

std::vector<Rat> flatten(const RatMatrix& m) {
    std::vector<Rat> v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

// Coordinates with respect to a list of independent vectors via an invertible
// square submatrix on pivot rows.
class Coordinates {
public:
    explicit Coordinates(const std::vector<std::vector<Rat>>& basis) : basis_(basis) {
        if (basis.empty()) return;
        const std::size_t len = basis.front().size();
        RatMatrix cols(len, basis.size());
        for (std::size_t k = 0; k < basis.size(); ++k)
            for (std::size_t i = 0; i < len; ++i) cols(i, k) = basis[k][i];
        // greedy pivot rows: a row joins when it raises the rank
        std::vector<std::vector<Rat>> chosen;
        SparseEchelon ech(basis.size());
        for (std::size_t i = 0; i < len && pivots_.size() < basis.size(); ++i) {
            std::vector<Rat> r(cols.row(i).begin(), cols.row(i).end());
            if (insert_dense(ech, r)) {
                pivots_.push_back(i);
                chosen.push_back(std::move(r));
            }
        }
        if (pivots_.size() != basis.size()) throw Error(ErrorCode::invalid_input, "coordinates: dependent basis");
        inverse_ = rational_inverse(RatMatrix::from_rows(chosen, basis.size()));
    }

    std::vector<Rat> solve(const std::vector<Rat>& v) const {
        std::vector<Rat> rhs;
        for (std::size_t p : pivots_) rhs.push_back(v[p]);
        std::vector<Rat> c = inverse_ * rhs;
        // the vector must actually lie in the span
        for (std::size_t i = 0; i < v.size(); ++i) {
            Rat s = 0;
            for (std::size_t k = 0; k < c.size(); ++k) s += c[k] * basis_[k][i];
            if (s != v[i]) throw Error(ErrorCode::inconsistent, "vector leaves the span of the basis");
        }
        return c;
    }

private:
    std::vector<std::vector<Rat>> basis_;
    std::vector<std::size_t> pivots_;
    RatMatrix inverse_;
};

}  // namespace

FinDimLie lie_from_matrices(const std::vector<RatMatrix>& basis, std::vector<std::string> labels) {
    std::vector<std::vector<Rat>> flat;
    for (const auto& m : basis) flat.push_back(flatten(m));
    Coordinates coords(flat);
    FinDimLie l(basis.size(), std::move(labels));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            auto c = coords.solve(flatten(basis[i] * basis[j] - basis[j] * basis[i]));
            SparseVec v;
            for (std::size_t k = 0; k < c.size(); ++k)
                if (sgn(c[k]) != 0) v.emplace_back(k, c[k]);
            l.set_bracket(i, j, std::move(v));
        }
    l.check();
    return l;
}

MatrixLie builtin_simple(std::string_view type) {
    std::size_t n = 0;
    if (type == "A1") n = 2;
    else if (type == "A2") n = 3;
    else throw Error(ErrorCode::unsupported, "builtin_simple supports A1 and A2, not " + std::string(type));
    MatrixLie g;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            RatMatrix e(n, n);
            e(i, j) = 1;
            g.basis.push_back(std::move(e));
            labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
        }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        RatMatrix h(n, n);
        h(i, i) = 1;
        h(i + 1, i + 1) = -1;
        g.basis.push_back(std::move(h));
        labels.push_back("H" + std::to_string(i + 1));
    }
    g.lie = lie_from_matrices(g.basis, std::move(labels));
    return g;
}

namespace {

using Monomial = std::vector<int>;  // exponents of x_1..x_n, y_1..y_n
using Poly = std::map<Monomial, Rat>;

void monomials(std::size_t n, int degree, std::size_t offset, Monomial& cur, std::size_t var,
               std::vector<Monomial>& out) {
    if (var == n - 1) {
        cur[offset + var] = degree;
        out.push_back(cur);
        cur[offset + var] = 0;
        return;
    }
    for (int k = degree; k >= 0; --k) {
        cur[offset + var] = k;
        monomials(n, degree - k, offset, cur, var + 1, out);
    }
    cur[offset + var] = 0;
}

// X acts as sum_ij X_ij (x_i d/dx_j - y_j d/dy_i)
Poly apply(const RatMatrix& x, const Poly& p, std::size_t n) {
    Poly out;
    for (const auto& [mono, c] : p)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (sgn(x(i, j)) == 0) continue;
                if (mono[j] > 0) {
                    Monomial m = mono;
                    const int e = m[j]--;
                    ++m[i];
                    out[m] += x(i, j) * c * e;
                }
                if (mono[n + i] > 0) {
                    Monomial m = mono;
                    const int e = m[n + i]--;
                    ++m[n + j];
                    out[m] -= x(i, j) * c * e;
                }
            }
    std::erase_if(out, [](const auto& e) { return sgn(e.second) == 0; });
    return out;
}

}  // namespace

FinModule sl_module(const std::vector<RatMatrix>& basis, const Weight& lambda) {
    if (basis.empty()) throw Error(ErrorCode::invalid_input, "sl_module: empty basis");
    const std::size_t n = basis.front().rows();
    if (lambda.size() != n - 1) throw Error(ErrorCode::dimension_mismatch, "sl_module: weight length must be n - 1");
    for (std::size_t i = 1; i + 1 < lambda.size(); ++i)
        if (lambda[i] != 0) throw Error(ErrorCode::unsupported, "sl_module: only weights (a, 0, ..., 0, b)");
    if (!is_dominant(lambda)) throw Error(ErrorCode::not_dominant, "sl_module: weight is not dominant");
    const int a = static_cast<int>(lambda.front());
    const int b = n > 2 ? static_cast<int>(lambda.back()) : 0;

    std::vector<Monomial> xs, ys, all;
    Monomial cur(2 * n, 0);
    monomials(n, a, 0, cur, 0, xs);
    monomials(n, b, n, cur, 0, ys);
    std::map<Monomial, std::size_t> index;
    for (const auto& mx : xs)
        for (const auto& my : ys) {
            Monomial m(2 * n);
            for (std::size_t i = 0; i < 2 * n; ++i) m[i] = mx[i] + my[i];
            index.emplace(m, all.size());
            all.push_back(m);
        }
    auto dense = [&](const Poly& p) {
        std::vector<Rat> v(all.size());
        for (const auto& [m, c] : p) v[index.at(m)] = c;
        return v;
    };

    // cyclic submodule generated by x_1^a y_n^b
    Monomial top(2 * n, 0);
    top[0] = a;
    top[2 * n - 1] = b;
    std::vector<Poly> found{Poly{{top, Rat(1)}}};
    std::vector<std::vector<Rat>> vectors{dense(found.front())};
    SparseEchelon ech(all.size());
    insert_dense(ech, vectors.front());
    for (std::size_t k = 0; k < found.size(); ++k)
        for (const auto& x : basis) {
            Poly img = apply(x, found[k], n);
            if (img.empty()) continue;
            auto v = dense(img);
            if (insert_dense(ech, v)) {
                vectors.push_back(std::move(v));
                found.push_back(std::move(img));
            }
        }

    Coordinates coords(vectors);
    FinModule m;
    m.dim = found.size();
    for (const auto& x : basis) {
        RatMatrix act(m.dim, m.dim);
        for (std::size_t k = 0; k < found.size(); ++k) {
            auto c = coords.solve(dense(apply(x, found[k], n)));
            for (std::size_t r = 0; r < m.dim; ++r) act(r, k) = c[r];
        }
        m.action.push_back(std::move(act));
    }
    return m;
}

FinModule evaluation_module(const MatrixLie& g, const IrrepLabel& label) {
    const std::size_t n = g.basis.front().rows();
    auto cd = cartan_data("A" + std::to_string(n - 1));
    check_label(*cd, label, 0);
    const Int expected = dim(*cd, label.highest_weight);
    if (expected > 64) throw Error(ErrorCode::unsupported, "evaluation_module: dimension above 64");
    FinModule m = sl_module(g.basis, label.highest_weight);
    if (Int(static_cast<unsigned long>(m.dim)) != expected)
        throw Error(ErrorCode::inconsistent, "evaluation_module: dimension differs from the Weyl formula");
    return m;
}

FinDimLie truncated_current(const FinDimLie& g, std::size_t n) {
    if (n == 0) throw Error(ErrorCode::invalid_input, "truncated_current: N must be at least 1");
    const std::size_t d = g.dim();
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& s : g.labels()) labels.push_back(i ? s + "t" + std::to_string(i) : s);
    FinDimLie out(n * d, std::move(labels));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            if (i + j >= n) continue;
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t b = 0; b < d; ++b) {
                    const std::size_t x = i * d + a, y = j * d + b;
                    if (x >= y) continue;
                    SparseVec v = g.bracket(a, b);
                    for (auto& [k, c] : v) k += (i + j) * d;
                    out.set_bracket(x, y, std::move(v));
                }
        }
    return out;
}

// ---------------------------------------------------------------------------
// Onsager

OnsagerPair builtin_onsager_sl2() {
    OnsagerPair p;
    RatMatrix h(2, 2), e(2, 2), f(2, 2);
    h(0, 0) = 1;
    h(1, 1) = -1;
    e(0, 1) = 1;
    f(1, 0) = 1;
    p.g_basis = {h, e, f};
    p.g0_ab = {0};
    p.g1 = {1, 2};
    p.rho_value = 2;  // [h, e] = 2e
    return p;
}

OnsagerPair builtin_onsager_sl3_transpose() {
    OnsagerPair p;
    auto unit = [](std::size_t i, std::size_t j) {
        RatMatrix m(3, 3);
        m(i, j) = 1;
        return m;
    };
    const std::pair<std::size_t, std::size_t> offdiag[] = {{0, 1}, {0, 2}, {1, 2}};
    for (auto [i, j] : offdiag) {
        p.g0_rss.push_back(p.g_basis.size());
        p.g_basis.push_back(unit(i, j) - unit(j, i));
    }
    for (auto [i, j] : offdiag) {
        p.g1.push_back(p.g_basis.size());
        p.g_basis.push_back(unit(i, j) + unit(j, i));
    }
    for (std::size_t i = 0; i < 2; ++i) {
        p.g1.push_back(p.g_basis.size());
        p.g_basis.push_back(unit(i, i) - unit(i + 1, i + 1));
    }
    return p;
}

namespace {

using UPoly = std::vector<Rat>;  // coefficients in u = z - z0, lowest degree first

UPoly mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// remainder modulo a monic polynomial
UPoly reduce(UPoly p, const UPoly& m) {
    const std::size_t d = m.size() - 1;
    for (std::size_t k = p.size(); k-- > d;) {
        const Rat lead = p[k];
        if (sgn(lead) == 0) continue;
        for (std::size_t i = 0; i <= d; ++i) p[k - d + i] -= lead * m[i];
    }
    p.resize(std::min(p.size(), d));
    p.resize(d);
    return p;
}

}  // namespace

OnsagerQuotient build_onsager_quotient(const OnsagerPair& pair, const Rat& x) {
    if (sgn(x) == 0) throw Error(ErrorCode::invalid_input, "onsager quotient: t = 0 is not a point of k^x");
    const bool fixed = x == 1 || x == -1;
    const Rat z0 = x + 1 / x;
    const Rat y0 = x - 1 / x;
    FinDimLie g = lie_from_matrices(pair.g_basis);

    enum Part { rss, ab, one };
    std::vector<Part> part(g.dim(), rss);
    std::vector<bool> assigned(g.dim(), false);
    auto mark = [&](const std::vector<std::size_t>& idx, Part p) {
        for (std::size_t i : idx) {
            if (i >= g.dim() || assigned[i]) throw Error(ErrorCode::invalid_input, "onsager pair: bad eigenbasis split");
            assigned[i] = true;
            part[i] = p;
        }
    };
    mark(pair.g0_rss, rss);
    mark(pair.g0_ab, ab);
    mark(pair.g1, one);
    if (std::find(assigned.begin(), assigned.end(), false) != assigned.end())
        throw Error(ErrorCode::invalid_input, "onsager pair: eigenbasis split does not cover g");

    const UPoly u = {Rat(0), Rat(1)};
    const UPoly y2 = {z0 * z0 - 4, 2 * z0, Rat(1)};  // z^2 - 4 in powers of u
    const UPoly u_times_zz = mul(u, {2 * z0, Rat(1)});  // (z - z0)(z + z0)
    std::map<Part, UPoly> ideal;
    if (fixed) {
        ideal[rss] = u;
        ideal[ab] = u_times_zz;  // z^2 - 4 = u (u + 2 z0) since z0^2 = 4
        ideal[one] = u;
    } else {
        const UPoly u2 = mul(u, u);
        ideal[rss] = u2;
        ideal[ab] = mul(y2, u2);
        ideal[one] = u2;
    }

    OnsagerQuotient q;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> pos;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t k = 0; k + 1 < ideal[part[i]].size(); ++k) {
            pos[{i, k}] = q.index.size();
            q.index.emplace_back(i, k);
            labels.push_back((part[i] == one ? "y*" : "") + g.labels()[i] + "*u^" + std::to_string(k));
        }
    q.lie = FinDimLie(q.index.size(), std::move(labels));
    for (std::size_t s = 0; s < q.index.size(); ++s)
        for (std::size_t t = s + 1; t < q.index.size(); ++t) {
            const auto [i, k] = q.index[s];
            const auto [j, l] = q.index[t];
            UPoly p(k + l + 1);
            p[k + l] = 1;
            if (part[i] == one && part[j] == one) p = mul(p, y2);
            std::map<std::size_t, Rat> acc;
            for (const auto& [c, coef] : g.bracket(i, j)) {
                UPoly r = reduce(p, ideal[part[c]]);
                for (std::size_t m = 0; m < r.size(); ++m)
                    if (sgn(r[m]) != 0) acc[pos.at({c, m})] += coef * r[m];
            }
            SparseVec v(acc.begin(), acc.end());
            q.lie.set_bracket(s, t, std::move(v));
        }
    q.lie.check();

    for (std::size_t i = 0; i < g.dim(); ++i)
        if (!fixed || part[i] != one) q.image_basis.push_back(i);
    q.evaluation = RatMatrix(q.image_basis.size(), q.index.size());
    for (std::size_t r = 0; r < q.image_basis.size(); ++r) {
        const std::size_t i = q.image_basis[r];
        if (auto it = pos.find({i, 0}); it != pos.end()) q.evaluation(r, it->second) = part[i] == one ? y0 : Rat(1);
    }
    return q;
}

// ---------------------------------------------------------------------------
// Exchange

ExchangeQuotient build_exchange_quotient(const FinDimLie& s, bool fixed, std::size_t tangent_dim) {
    const FinDimLie g = fixed ? s : direct_sum(s, s);
    const std::size_t d = g.dim();
    std::vector<std::string> labels = g.labels();
    for (std::size_t m = 1; m <= tangent_dim; ++m)
        for (const auto& l : g.labels()) labels.push_back(l + "*u" + std::to_string(m));
    ExchangeQuotient q{FinDimLie((tangent_dim + 1) * d, std::move(labels)), RatMatrix(d, (tangent_dim + 1) * d)};
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            if (a < b) q.lie.set_bracket(a, b, g.bracket(a, b));
            for (std::size_t m = 1; m <= tangent_dim; ++m) {
                SparseVec v = g.bracket(a, b);
                for (auto& [k, c] : v) k += m * d;
                q.lie.set_bracket(a, m * d + b, std::move(v));
            }
        }
    q.lie.check();
    for (std::size_t a = 0; a < d; ++a) q.evaluation(a, a) = 1;
    return q;
}

}  // namespace emext
