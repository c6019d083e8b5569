#include <algorithm>
#include <map>
#include <numeric>

#include "emext/oracle.hpp"

namespace emext {

FinDimLie::FinDimLie(std::size_t dim, std::vector<std::string> labels)
    : dim_(dim), labels_(std::move(labels)), table_(dim * dim) {
    if (labels_.empty())
        for (std::size_t i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i));
    if (labels_.size() != dim) throw Error(ErrorCode::dimension_mismatch, "one label per basis element");
}

void FinDimLie::set_bracket(std::size_t i, std::size_t j, SparseVec v) {
    std::erase_if(v, [](const auto& e) { return sgn(e.second) == 0; });
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec neg = v;
    for (auto& [k, c] : neg) c = -c;
    table_[i * dim_ + j] = std::move(v);
    table_[j * dim_ + i] = std::move(neg);
}

std::vector<Rat> FinDimLie::bracket(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
    std::vector<Rat> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (sgn(y[j]) == 0) continue;
            const Rat f = x[i] * y[j];
            for (const auto& [k, c] : bracket(i, j)) out[k] += f * c;
        }
    }
    return out;
}

void FinDimLie::check() const {
    for (std::size_t i = 0; i < dim_; ++i) {
        if (!bracket(i, i).empty()) throw Error(ErrorCode::inconsistent, "[x, x] != 0 for " + labels_[i]);
        for (std::size_t j = i + 1; j < dim_; ++j) {
            const auto& a = bracket(i, j);
            const auto& b = bracket(j, i);
            bool anti = a.size() == b.size();
            for (std::size_t k = 0; anti && k < a.size(); ++k)
                anti = a[k].first == b[k].first && a[k].second == -b[k].second;
            if (!anti) throw Error(ErrorCode::inconsistent, "bracket is not antisymmetric");
        }
    }
    // [a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0
    std::vector<Rat> acc(dim_);
    auto add_nested = [&](std::size_t a, std::size_t b, std::size_t c) {
        for (const auto& [m, x] : bracket(b, c))
            for (const auto& [k, y] : bracket(a, m)) acc[k] += x * y;
    };
    for (std::size_t a = 0; a < dim_; ++a)
        for (std::size_t b = a + 1; b < dim_; ++b)
            for (std::size_t c = b + 1; c < dim_; ++c) {
                std::fill(acc.begin(), acc.end(), Rat(0));
                add_nested(a, b, c);
                add_nested(b, c, a);
                add_nested(c, a, b);
                for (const auto& v : acc)
                    if (sgn(v) != 0)
                        throw Error(ErrorCode::inconsistent, "Jacobi identity fails for " + labels_[a] + ", " +
                                                                 labels_[b] + ", " + labels_[c]);
            }
}

void FinModule::check(const FinDimLie& l) const {
    if (action.size() != l.dim()) throw Error(ErrorCode::dimension_mismatch, "one action matrix per basis element");
    for (const auto& m : action)
        if (m.rows() != dim || m.cols() != dim)
            throw Error(ErrorCode::dimension_mismatch, "action matrix has the wrong shape");
    for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t j = i + 1; j < l.dim(); ++j) {
            RatMatrix lhs(dim, dim);
            for (const auto& [k, c] : l.bracket(i, j)) lhs = lhs + c * action[k];
            RatMatrix rhs = action[i] * action[j] - action[j] * action[i];
            if (!(lhs == rhs))
                throw Error(ErrorCode::inconsistent,
                            "module action does not respect [" + l.labels()[i] + ", " + l.labels()[j] + "]");
        }
}

namespace {

struct SparseMatrix {
    std::vector<std::vector<std::pair<std::size_t, Rat>>> rows;
};

SparseMatrix sparse(const RatMatrix& m) {
    SparseMatrix s;
    s.rows.resize(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (sgn(m(i, j)) != 0) s.rows[i].emplace_back(j, m(i, j));
    return s;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Exact rank of a sparse rational system, solved per connected component of
// the variable graph.
std::size_t sparse_rank(std::size_t cols, const std::vector<std::map<std::size_t, Rat>>& rows) {
    UnionFind uf(cols);
    for (const auto& r : rows)
        for (auto it = std::next(r.begin(), r.empty() ? 0 : 1); it != r.end(); ++it) uf.unite(r.begin()->first, it->first);

    std::map<std::size_t, std::vector<std::size_t>> rows_by_root;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!rows[i].empty()) rows_by_root[uf.find(rows[i].begin()->first)].push_back(i);

    std::vector<std::size_t> local(cols, 0);
    std::map<std::size_t, std::size_t> comp_size;
    for (std::size_t c = 0; c < cols; ++c) local[c] = comp_size[uf.find(c)]++;

    std::size_t rank = 0;
    for (const auto& [root, members] : rows_by_root) {
        SparseEchelon ech(comp_size[root]);
        std::vector<std::pair<std::size_t, Rat>> buf;
        for (std::size_t i : members) {
            buf.clear();
            for (const auto& [c, v] : rows[i]) buf.emplace_back(local[c], v);
            ech.insert_rational(buf);
            if (ech.rank() == ech.cols()) break;
        }
        rank += ech.rank();
    }
    return rank;
}

}  // namespace

std::size_t invariants_dim(const FinDimLie& l, const FinModule& v) {
    std::vector<std::map<std::size_t, Rat>> rows;
    for (std::size_t a = 0; a < l.dim(); ++a)
        for (std::size_t p = 0; p < v.dim; ++p) {
            std::map<std::size_t, Rat> r;
            for (std::size_t q = 0; q < v.dim; ++q)
                if (sgn(v.action[a](p, q)) != 0) r.emplace(q, v.action[a](p, q));
            if (!r.empty()) rows.push_back(std::move(r));
        }
    return v.dim - sparse_rank(v.dim, rows);
}

std::size_t h1_dim(const FinDimLie& l, const FinModule& v) {
    const std::size_t n = l.dim();
    const std::size_t d = v.dim;
    if (v.action.size() != n) throw Error(ErrorCode::dimension_mismatch, "h1_dim: module is not over this algebra");
    std::vector<SparseMatrix> acts;
    for (const auto& m : v.action) acts.push_back(sparse(m));

    // unknown (a, p) = component p of the derivation's value on e_a
    auto var = [d](std::size_t a, std::size_t p) { return a * d + p; };
    std::vector<std::map<std::size_t, Rat>> rows;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t p = 0; p < d; ++p) {
                // D([a,b]) - a.D(b) + b.D(a) = 0, component p
                std::map<std::size_t, Rat> r;
                for (const auto& [c, coef] : l.bracket(a, b)) r[var(c, p)] += coef;
                for (const auto& [q, x] : acts[a].rows[p]) r[var(b, q)] -= x;
                for (const auto& [q, x] : acts[b].rows[p]) r[var(a, q)] += x;
                std::erase_if(r, [](const auto& e) { return sgn(e.second) == 0; });
                if (!r.empty()) rows.push_back(std::move(r));
            }
    const std::size_t der = n * d - sparse_rank(n * d, rows);
    const std::size_t inner = d - invariants_dim(l, v);
    return der - inner;
}

FinModule hom_module(const FinModule& v1, const FinModule& v2) {
    if (v1.action.size() != v2.action.size())
        throw Error(ErrorCode::dimension_mismatch, "hom_module: modules over different algebras");
    FinModule h;
    h.dim = v1.dim * v2.dim;
    const RatMatrix i1 = RatMatrix::identity(v1.dim);
    const RatMatrix i2 = RatMatrix::identity(v2.dim);
    for (std::size_t a = 0; a < v1.action.size(); ++a)
        h.action.push_back(kron(v2.action[a], i1) - kron(i2, v1.action[a].transpose()));
    return h;
}

std::size_t ext1_dim(const FinDimLie& l, const FinModule& v1, const FinModule& v2) {
    return h1_dim(l, hom_module(v1, v2));
}

FinModule dual_module(const FinModule& v) {
    FinModule out;
    out.dim = v.dim;
    for (const auto& m : v.action) out.action.push_back(Rat(-1) * m.transpose());
    return out;
}

FinModule trivial_module(const FinDimLie& l) { return one_dim_module(l, std::vector<Rat>(l.dim())); }

FinModule one_dim_module(const FinDimLie& l, const std::vector<Rat>& lambda) {
    if (lambda.size() != l.dim()) throw Error(ErrorCode::dimension_mismatch, "character length differs from dim L");
    FinModule m;
    m.dim = 1;
    for (const auto& x : lambda) {
        RatMatrix a(1, 1);
        a(0, 0) = x;
        m.action.push_back(std::move(a));
    }
    return m;
}

FinModule pullback(const FinModule& m, const RatMatrix& phi) {
    if (phi.rows() != m.action.size())
        throw Error(ErrorCode::dimension_mismatch, "pullback: map codomain differs from the module's algebra");
    FinModule out;
    out.dim = m.dim;
    for (std::size_t a = 0; a < phi.cols(); ++a) {
        RatMatrix act(m.dim, m.dim);
        for (std::size_t b = 0; b < phi.rows(); ++b)
            if (sgn(phi(b, a)) != 0) act = act + phi(b, a) * m.action[b];
        out.action.push_back(std::move(act));
    }
    return out;
}

FinDimLie direct_sum(const FinDimLie& a, const FinDimLie& b) {
    std::vector<std::string> labels;
    for (const auto& s : a.labels()) labels.push_back(s + "'1");
    for (const auto& s : b.labels()) labels.push_back(s + "'2");
    FinDimLie out(a.dim() + b.dim(), std::move(labels));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j) out.set_bracket(i, j, a.bracket(i, j));
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = i + 1; j < b.dim(); ++j) {
            SparseVec v = b.bracket(i, j);
            for (auto& [k, c] : v) k += a.dim();
            out.set_bracket(a.dim() + i, a.dim() + j, std::move(v));
        }
    return out;
}

FinModule external_tensor(const FinModule& m1, const FinModule& m2) {
    FinModule out;
    out.dim = m1.dim * m2.dim;
    const RatMatrix i1 = RatMatrix::identity(m1.dim);
    const RatMatrix i2 = RatMatrix::identity(m2.dim);
    for (const auto& a : m1.action) out.action.push_back(kron(a, i2));
    for (const auto& b : m2.action) out.action.push_back(kron(i1, b));
    return out;
}

std::size_t h1_onedim_via_Klambda(const FinDimLie& l, const std::vector<Rat>& lambda) {
    const std::size_t n = l.dim();
    if (lambda.size() != n) throw Error(ErrorCode::dimension_mismatch, "character length differs from dim L");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            Rat v = 0;
            for (const auto& [k, c] : l.bracket(a, b)) v += c * lambda[k];
            if (sgn(v) != 0) throw Error(ErrorCode::invalid_input, "lambda does not vanish on [L, L]");
        }
    // basis of K = ker lambda
    std::vector<std::vector<Rat>> kernel;
    auto pivot = std::find_if(lambda.begin(), lambda.end(), [](const Rat& x) { return sgn(x) != 0; });
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<Rat> u(n);
        if (pivot == lambda.end()) {
            u[a] = 1;
        } else {
            const std::size_t p = static_cast<std::size_t>(pivot - lambda.begin());
            if (a == p) continue;
            u[a] = 1;
            u[p] = -lambda[a] / lambda[p];
        }
        kernel.push_back(std::move(u));
    }
    // D = K' + span{lambda(z) u - [z, u]}
    std::vector<std::vector<Rat>> span;
    for (std::size_t i = 0; i < kernel.size(); ++i)
        for (std::size_t j = i + 1; j < kernel.size(); ++j) span.push_back(l.bracket(kernel[i], kernel[j]));
    for (std::size_t z = 0; z < n; ++z) {
        std::vector<Rat> ez(n);
        ez[z] = 1;
        for (const auto& u : kernel) {
            auto w = l.bracket(ez, u);
            for (std::size_t k = 0; k < n; ++k) w[k] = lambda[z] * u[k] - w[k];
            span.push_back(std::move(w));
        }
    }
    const std::size_t dim_d = span.empty() ? 0 : rational_rank(RatMatrix::from_rows(span, n));
    return kernel.size() - dim_d;
}

}  // namespace emext
