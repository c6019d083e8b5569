#include <doctest.h>

#include "emext/chars.hpp"
#include "support.hpp"

using namespace emext;

namespace {
IrrepLabel lab(const Weight& w) { return IrrepLabel{w, {}}; }
}  // namespace

TEST_CASE("Weyl dimensions") {
    CHECK(dim(*cartan_data("A2"), Weight{1, 1}) == 8);
    CHECK(dim(*cartan_data("A2"), Weight{2, 0}) == 6);
    CHECK(dim(*cartan_data("G2"), Weight{1, 0}) == 7);
    CHECK(dim(*cartan_data("G2"), Weight{0, 1}) == 14);
    CHECK(dim(*cartan_data("B3"), Weight{0, 0, 1}) == 8);
    CHECK(dim(*cartan_data("F4"), Weight{0, 0, 0, 1}) == 26);
    CHECK(dim(*cartan_data("E8"), Weight{0, 0, 0, 0, 0, 0, 0, 1}) == 248);
    CHECK(dim(*cartan_data("E6"), Weight{1, 0, 0, 0, 0, 0}) == 27);
    CHECK(dim(*cartan_data(""), Weight{}) == 1);
}

TEST_CASE("weight multiplicities") {
    auto a2 = cartan_data("A2");
    auto m = weight_multiplicities(*a2, {1, 1});
    CHECK(m.at({0, 0}) == 2);
    CHECK(m.size() == 7);
    auto g2 = cartan_data("G2");
    CHECK(weight_multiplicities(*g2, {0, 1}).at({0, 0}) == 2);
    CHECK(weight_multiplicities(*g2, {1, 0}).at({0, 0}) == 1);
}

TEST_CASE("tensor decompositions") {
    auto a1 = cartan_data("A1");
    CHECK(format_module(tensor_decompose(*a1, {1}, {1})) == "V(0) + V(2)");
    CHECK(tensor_multiplicity(*a1, {2}, {3}, {1}) == 1);
    CHECK(tensor_multiplicity(*a1, {2}, {3}, {2}) == 0);
    auto a2 = cartan_data("A2");
    CHECK(format_module(tensor_decompose(*a2, {1, 0}, {1, 0})) == "V(0,1) + V(2,0)");
    CHECK(dim(*a2, tensor_decompose(*a2, {1, 1}, {1, 1})) == 64);
    CHECK(tensor_multiplicity(*a2, {1, 1}, {1, 1}, {1, 1}) == 2);
    CHECK(tensor_multiplicity(*a2, {1, 1}, {1, 1}, {0, 0}) == 1);
}

TEST_CASE("Klimyk agrees with character stripping on B2") {
    auto b2 = cartan_data("B2");
    for (const Weight& l : {Weight{1, 0}, Weight{0, 1}, Weight{1, 1}})
        for (const Weight& m : {Weight{0, 1}, Weight{2, 0}}) {
            auto brute = testing::strip_character(*b2, testing::product_character(*b2, l, m));
            CHECK(tensor_decompose(*b2, l, m).terms == brute.terms);
        }
}

TEST_CASE("hom dimensions") {
    auto a1 = cartan_data("A1");
    ModuleExpr adj = adjoint_module(*a1);
    CHECK(hom_dim(*a1, adj, lab({1}), lab({3})) == 1);
    CHECK(hom_dim(*a1, adj, lab({1}), lab({1})) == 1);
    CHECK(hom_dim(*a1, adj, lab({0}), lab({0})) == 0);
    CHECK(hom_dim(*a1, adj, lab({0}), lab({2})) == 1);
    CHECK(hom_dim(*a1, adj, lab({1}), lab({5})) == 0);
}

TEST_CASE("charges must add exactly") {
    auto a1 = cartan_data("A1");
    ModuleExpr u;
    u.add(IrrepLabel{{2}, {Rat(1)}}, 1);
    CHECK(hom_dim(*a1, u, IrrepLabel{{0}, {Rat(0)}}, IrrepLabel{{2}, {Rat(1)}}) == 1);
    CHECK(hom_dim(*a1, u, IrrepLabel{{0}, {Rat(0)}}, IrrepLabel{{2}, {Rat(0)}}) == 0);
}

TEST_CASE("adjoint module with abelian part") {
    auto a1a1 = cartan_data("A1xA1");
    ModuleExpr adj = adjoint_module(*a1a1, 1);
    CHECK(dim(*a1a1, adj) == 7);
    CHECK(adj.multiplicity(trivial_label(*a1a1, 1)) == 1);
}

TEST_CASE("dual labels negate charges") {
    auto a2 = cartan_data("A2");
    IrrepLabel v{{2, 1}, {Rat(1, 2)}};
    IrrepLabel d = dual_label(*a2, v);
    CHECK(d.highest_weight == Weight{1, 2});
    CHECK(d.charges == std::vector<Rat>{Rat(-1, 2)});
    CHECK(format_label(v) == "V(2,1)[1/2]");
}

TEST_CASE("non-dominant labels are rejected") {
    auto a2 = cartan_data("A2");
    CHECK_THROWS_AS(check_label(*a2, lab({-1, 0}), 0), Error);
    CHECK_THROWS_AS(check_label(*a2, IrrepLabel{{1, 0}, {Rat(1)}}, 0), Error);
}
