#include <doctest.h>

#include "emext/ext.hpp"

using namespace emext;

namespace {

ExtResult ext(const std::string& text, const std::string& a, const std::string& b) {
    Document doc = load_document(text);
    return ext_dim(doc.algebra, doc.rep(a), doc.rep(b));
}

const char* multiloop_a1 = R"(algebra { family = multiloop; g = "A1"; n = 2 }
point "p1" { tangent_dim = 2 }
point "p2" { tangent_dim = 2 }
rep "V1" { at "p1" weight = [1] }
rep "V3" { at "p1" weight = [3] }
rep "W1" { at "p2" weight = [1] }
rep "T" { }
rep "U" { at "p1" weight = [1]; at "p2" weight = [2] }
rep "U2" { at "p1" weight = [1]; at "p2" weight = [4] }
)";

}  // namespace

TEST_CASE("supports differing at two orbits give zero") {
    CHECK(ext(multiloop_a1, "V1", "W1").is_zero());
}

TEST_CASE("single differing orbit reduces to the local formula") {
    // n * dim Hom(g (x) V(1), V(3)) = 2 * 1
    CHECK(ext(multiloop_a1, "V1", "V3").finite_dim == 2);
    CHECK(ext(multiloop_a1, "T", "V1").finite_dim == 0);
    // V(2) at p2 against V(4) at p2 with V(1) shared at p1
    CHECK(ext(multiloop_a1, "U", "U2").finite_dim == 2);
}

TEST_CASE("self extensions sum over the support for perfect algebras") {
    ExtResult r = ext(multiloop_a1, "U", "U");
    CHECK(r.finite_dim == 4);
    CHECK(r.infinite_summands.empty());
    CHECK(ext(multiloop_a1, "T", "T").is_zero());
}

TEST_CASE("onsager sl2") {
    const char* doc = R"(algebra { family = onsager; g = "A1" }
point "x" { fixed = true; param = 1 }
point "y" { fixed = true; param = -1 }
point "t" { param = 3 }
rep "a0" { at "x" charge = [0] }
rep "a1" { at "x" charge = [1] }
rep "a2" { at "x" charge = [2] }
rep "b1" { at "y" charge = [1] }
rep "both" { at "x" charge = [1]; at "y" charge = [1] }
rep "V2" { at "t" weight = [2] }
rep "V4" { at "t" weight = [4] }
rep "T" { }
)";
    CHECK(ext(doc, "a1", "a1").finite_dim == 2);
    CHECK(ext(doc, "a1", "a2").finite_dim == 1);
    CHECK(ext(doc, "a0", "a2").finite_dim == 0);
    CHECK(ext(doc, "a1", "b1").finite_dim == 0);
    // free point: Hom(g (x) V, V) plus 2 dim g0_ab
    CHECK(ext(doc, "V2", "V2").finite_dim == 3);
    CHECK(ext(doc, "V2", "V4").finite_dim == 1);
    // two support points share one copy of the abelianization
    CHECK(ext(doc, "both", "both").finite_dim == 2);
    CHECK(ext(doc, "T", "T").finite_dim == 2);
}

TEST_CASE("onsager sl3 with the transpose involution") {
    // g0 = so3, g1 = traceless symmetric matrices = V(4) of so3
    const char* doc = R"(algebra { family = onsager; g = "A2"; g0 = "A1"; g0_ab_dim = 0; nu = [4] }
point "x" { fixed = true; param = 1 }
rep "T" { }
rep "V4" { at "x" weight = [4] }
rep "V2" { at "x" weight = [2] }
)";
    CHECK(ext(doc, "T", "V4").finite_dim == 1);
    CHECK(ext(doc, "T", "V2").finite_dim == 0);
    CHECK(ext(doc, "V2", "V2").finite_dim == 1);
}

TEST_CASE("abelian part of g splits off") {
    const char* doc = R"(algebra { family = untwisted; g = "A1"; g_ab_dim = 1 }
point "p" {}
rep "a" { at "p" weight = [1] charge = [1] }
rep "b" { at "p" weight = [1] charge = [2] }
rep "c" { at "p" weight = [3] charge = [1] }
)";
    CHECK(ext(doc, "a", "b").is_zero());
    ExtResult same = ext(doc, "a", "a");
    CHECK(same.finite_dim == 1);
    REQUIRE(same.infinite_summands.size() == 1);
    CHECK(format_ext(same) == "1 + dual(M_ab)^1");
    CHECK(ext(doc, "a", "c").finite_dim == 1);
    CHECK(ext(doc, "a", "c").infinite_summands.empty());
}

TEST_CASE("noneval mismatch") {
    const char* doc = R"(algebra { family = untwisted; g = "A1"; g_ab_dim = 1 }
point "p" {}
rep "a" { at "p" weight = [1]; noneval = "s" }
rep "b" { at "p" weight = [1]; noneval = "t" }
)";
    ExtResult r = ext(doc, "a", "b");
    CHECK(r.is_zero());
    CHECK(r.breakdown.front().first == "noneval mismatch");
}

TEST_CASE("Kunneth case table") {
    KunnethSide a{{}, false}, b{{}, false};
    a.ext.add("a", 2);
    b.ext.add("b", 3);
    CHECK(kunneth_ext(a, b).finite_dim == 0);
    a.isomorphic = true;
    CHECK(kunneth_ext(a, b).finite_dim == 3);
    b.isomorphic = true;
    CHECK(kunneth_ext(a, b).finite_dim == 5);
}

TEST_CASE("one-dimensional modules of abelian algebras") {
    CHECK(abelian_ext(3, {1, 2}, {1, 2}).finite_dim == 3);
    CHECK(abelian_ext(3, {1, 2}, {1, 3}).is_zero());
    ExtResult inf = abelian_ext(std::nullopt, {0}, {0});
    CHECK(inf.infinite_summands.size() == 1);
}

TEST_CASE("exchange free points use both copies") {
    const char* doc = R"(algebra { family = exchange; s = "A1" }
point "y" {}
rep "a" { at "y" weight = [1,0] }
rep "b" { at "y" weight = [1,2] }
rep "c" { at "y" weight = [3,0] }
)";
    CHECK(ext(doc, "a", "b").finite_dim == 1);
    CHECK(ext(doc, "a", "c").finite_dim == 1);
    CHECK(ext(doc, "a", "a").finite_dim == 1);
}
