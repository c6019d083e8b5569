#include <doctest.h>

#include "emext/error.hpp"
#include "emext/intlinalg.hpp"

using namespace emext;

namespace {

IntMatrix imat(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Int>> r;
    for (auto row : rows) r.emplace_back(row.begin(), row.end());
    return IntMatrix::from_rows(r, r.empty() ? 0 : r.front().size());
}

void check_smith(const IntMatrix& a) {
    SmithForm s = smith_normal_form(a);
    IntMatrix d = s.u * a * s.v;
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j) CHECK(d(i, j) == (i == j ? s.d[i] : Int(0)));
    for (std::size_t i = 0; i + 1 < s.d.size(); ++i) {
        CHECK(s.d[i] >= 0);
        if (s.d[i] != 0) CHECK(s.d[i + 1] % s.d[i] == 0);
    }
    CHECK(abs(determinant(s.u)) == 1);
    CHECK(abs(determinant(s.v)) == 1);
}

}  // namespace

TEST_CASE("smith form of the A2 Cartan matrix") {
    SmithForm s = smith_normal_form(imat({{2, -1}, {-1, 2}}));
    CHECK(s.d == std::vector<Int>{1, 3});
    CHECK(s.rank() == 2);
    check_smith(imat({{2, -1}, {-1, 2}}));
}

TEST_CASE("smith form invariants on assorted matrices") {
    check_smith(imat({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
    check_smith(imat({{0, 0}, {0, 0}}));
    check_smith(imat({{6, 10, 15}}));
    check_smith(imat({{3}, {6}, {9}}));
    SmithForm s = smith_normal_form(imat({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
    CHECK(s.d == std::vector<Int>{2, 6, 12});
    CHECK(smith_normal_form(imat({{2, 4}, {1, 2}})).rank() == 1);
}

TEST_CASE("determinant") {
    CHECK(determinant(imat({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}})) == 4);
    CHECK(determinant(imat({{0, 1}, {1, 0}})) == -1);
    CHECK(determinant(imat({{1, 2}, {2, 4}})) == 0);
}

TEST_CASE("quotient groups and cosets") {
    QuotientGroup q = quotient_of(LatticeSubgroup(2, imat({{2, -1}, {-1, 2}})));
    CHECK(q.nontrivial_factors() == std::vector<Int>{3});
    CHECK(q.order() == 3);
    CHECK(q.elements().size() == 3);
    std::vector<long> zero{0, 0}, e1{1, 0}, e2{0, 1}, e1e1{2, 0};
    CHECK(q.coset(std::span<const long>(zero)) == q.zero());
    CHECK(q.coset(std::span<const long>(e1)) != q.coset(std::span<const long>(e2)));
    CHECK(q.coset(std::span<const long>(e1e1)) == q.coset(std::span<const long>(e2)));

    QuotientGroup free = quotient_of(LatticeSubgroup(2, imat({{2, 0}})));
    CHECK_FALSE(free.is_finite());
    CHECK_THROWS_AS(free.order(), Error);
}

TEST_CASE("lattice membership") {
    LatticeSubgroup q(2, imat({{2, -1}, {-1, 2}}));
    std::vector<long> in{1, 1}, out{1, 0}, in2{3, 0};
    CHECK(lattice_contains(q, std::span<const long>(in)));
    CHECK_FALSE(lattice_contains(q, std::span<const long>(out)));
    CHECK(lattice_contains(q, std::span<const long>(in2)));
    LatticeSubgroup line(2, imat({{0, 2}}));
    std::vector<long> a{0, 4}, b{1, 0};
    CHECK(lattice_contains(line, std::span<const long>(a)));
    CHECK_FALSE(lattice_contains(line, std::span<const long>(b)));
}

TEST_CASE("rational rank, nullspace, solve and inverse") {
    RatMatrix a(2, 3);
    a(0, 0) = 1; a(0, 1) = 2; a(0, 2) = 3;
    a(1, 0) = Rat(1, 2); a(1, 1) = 1; a(1, 2) = Rat(3, 2);
    CHECK(rational_rank(a) == 1);
    CHECK(rational_kernel_dim(a) == 2);
    for (const auto& v : rational_nullspace(a)) CHECK((a * v) == std::vector<Rat>{0, 0});

    RatMatrix m(2, 2);
    m(0, 0) = 2; m(0, 1) = 1; m(1, 0) = 1; m(1, 1) = 1;
    CHECK(m * rational_inverse(m) == RatMatrix::identity(2));
    std::vector<Rat> b{3, 2};
    auto x = rational_solve(m, b);
    REQUIRE(x);
    CHECK(*x == std::vector<Rat>{1, 1});
    std::vector<Rat> inconsistent{1, 0};
    CHECK_FALSE(rational_solve(a, inconsistent));
}

TEST_CASE("primitive integer vectors") {
    std::vector<Rat> v{Rat(1, 2), Rat(-3, 4), 0};
    CHECK(primitive_integer_vector(v) == std::vector<Int>{2, -3, 0});
    std::vector<Rat> z{0, 0};
    CHECK(primitive_integer_vector(z) == std::vector<Int>{0, 0});
}

TEST_CASE("sparse echelon agrees with dense rank") {
    SparseEchelon e(4);
    CHECK(e.insert({{0, 2}, {3, 4}}));
    CHECK(e.insert({{1, 1}}));
    CHECK_FALSE(e.insert({{0, 1}, {3, 2}}));
    CHECK_FALSE(e.insert({{0, 2}, {1, 3}, {3, 4}}));
    CHECK(e.insert({{2, -5}}));
    CHECK(e.rank() == 3);
    std::vector<std::pair<std::size_t, Rat>> r{{0, Rat(1, 3)}, {3, Rat(2, 3)}};
    CHECK_FALSE(e.insert_rational(r));
}

TEST_CASE("kronecker product") {
    IntMatrix a = imat({{1, 2}}), b = imat({{0, 1}, {1, 0}});
    IntMatrix k = kron(a, b);
    CHECK(k.rows() == 2);
    CHECK(k.cols() == 4);
    CHECK(k(0, 3) == 2);
    CHECK(k(1, 2) == 2);
    CHECK(k(0, 0) == 0);
}
