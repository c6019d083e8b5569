#include <doctest.h>

#include "emext/blocks.hpp"
#include "emext/ext.hpp"

using namespace emext;

namespace {

const char* multiloop_a2 = R"(algebra { family = multiloop; g = "A2"; n = 1 }
point "p1" {}
point "p2" {}
rep "V" { at "p1" weight = [1,0] }
rep "W" { at "p1" weight = [0,1] }
rep "X" { at "p1" weight = [2,1] }
rep "Y" { at "p1" weight = [1,1] }
rep "Z" { at "p1" weight = [1,0]; at "p2" weight = [0,1] }
rep "T" { }
)";

IrrepLabel lab(const Weight& w) { return IrrepLabel{w, {}}; }

}  // namespace

TEST_CASE("multiloop spectral characters live in P/Q") {
    Document doc = load_document(multiloop_a2);
    const auto& c = doc.algebra;
    CHECK(same_block(c, doc.rep("V"), doc.rep("X")));
    CHECK_FALSE(same_block(c, doc.rep("V"), doc.rep("W")));
    CHECK(same_block(c, doc.rep("Y"), doc.rep("T")));
    CHECK(spectral_character(c, doc.rep("Y")).values.empty());
    CHECK(spectral_character(c, doc.rep("Z")).values.size() == 2);
    CHECK(block_quotient(c, c.point("p1")).order() == 3);
}

TEST_CASE("extensions stay inside a block") {
    Document doc = load_document(R"(algebra { family = multiloop; g = "A1"; n = 1 }
point "p" {}
rep "V0" { }
rep "V1" { at "p" weight = [1] }
rep "V2" { at "p" weight = [2] }
rep "V3" { at "p" weight = [3] }
rep "V4" { at "p" weight = [4] }
)");
    for (const auto& [a, ra] : doc.reps)
        for (const auto& [b, rb] : doc.reps)
            if (!ext_dim(doc.algebra, ra, rb).is_zero()) CHECK(same_block(doc.algebra, ra, rb));
}

TEST_CASE("enumeration counts") {
    Document doc = load_document(multiloop_a2);
    CHECK(enumerate_blocks(doc.algebra, {"p1"}).size() == 3);
    CHECK(enumerate_blocks(doc.algebra, {"p1", "p2"}).size() == 9);
    CHECK(enumerate_blocks(doc.algebra, {}).size() == 1);
}

TEST_CASE("exchange free points use s + s") {
    Document doc = load_document(R"(algebra { family = exchange; s = "A1" }
point "x" { fixed = true }
point "y" {}
)");
    CHECK(block_quotient(doc.algebra, doc.algebra.point("x")).order() == 2);
    CHECK(block_quotient(doc.algebra, doc.algebra.point("y")).nontrivial_factors() == std::vector<Int>{2, 2});
    CHECK(enumerate_blocks(doc.algebra, {"x", "y"}).size() == 8);
}

TEST_CASE("onsager fixed points") {
    Document sl2 = load_document(R"(algebra { family = onsager; g = "A1" }
point "x" { fixed = true; param = 1 }
point "t" { param = 2 }
rep "a" { at "x" charge = [1/2] }
rep "b" { at "x" charge = [3/2] }
rep "c" { at "x" charge = [1/3] }
rep "z" { at "x" charge = [1] }
)");
    const auto& c = sl2.algebra;
    CHECK(same_block(c, sl2.rep("a"), sl2.rep("b")));
    CHECK_FALSE(same_block(c, sl2.rep("a"), sl2.rep("c")));
    // integral charges are linked to the trivial module
    CHECK(spectral_character(c, sl2.rep("z")).values.empty());
    CHECK(block_class(c, c.point("x"), IrrepLabel{{}, {Rat(5, 2)}}).to_string() == "0;1/2 mod Z");
    CHECK_THROWS_AS(enumerate_blocks(c, {"x"}), Error);
    CHECK(enumerate_blocks(c, {"t"}).size() == 2);

    Document sl3 = load_document(R"(algebra { family = onsager; g = "A2"; g0 = "A1"; g0_ab_dim = 0; nu = [4] }
point "x" { fixed = true; param = 1 }
)");
    CHECK(enumerate_blocks(sl3.algebra, {"x"}).size() == 2);
}

TEST_CASE("abelian part makes enumeration nonfinite") {
    Document doc = load_document(R"(algebra { family = untwisted; g = "A1"; g_ab_dim = 1 }
point "p" {}
)");
    try {
        enumerate_blocks(doc.algebra, {"p"});
        FAIL("expected nonfinite");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::nonfinite);
    }
}

TEST_CASE("weight equivalence and chains") {
    auto a2 = cartan_data("A2");
    CHECK(weight_equivalence_quotient(*a2, module_weights(*a2, adjoint_module(*a2))).order() == 3);
    ModuleExpr fund;
    fund.add(lab({1, 0}), 1);
    CHECK(weight_equivalence_quotient(*a2, module_weights(*a2, fund)).order() == 1);

    auto a1 = cartan_data("A1");
    ModuleExpr v2;
    v2.add(lab({2}), 1);
    CHECK(chain_reachable(*a1, v2, {0}, {4}, 8));
    CHECK_FALSE(chain_reachable(*a1, v2, {0}, {3}, 8));
    CHECK(default_box_bound({1, 0}, {0, 3}) >= 3);
}
