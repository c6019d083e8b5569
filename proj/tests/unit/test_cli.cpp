#include <doctest.h>

#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = emext::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string scenario(const std::string& name) { return std::string(EMEXT_SCENARIO_DIR) + "/" + name; }

}  // namespace

TEST_CASE("quotient") {
    Run r = run({"quotient", "--g", "A2"});
    CHECK(r.code == 0);
    CHECK(r.out == "factors=3\norder=3\n");
    CHECK(run({"quotient", "--g", "E8"}).out == "factors=1\norder=1\n");
    CHECK(run({"quotient", "--g", "A2", "--span-of", "1,0"}).out == "factors=1\norder=1\n");
}

TEST_CASE("ext porcelain") {
    Run r = run({"ext", scenario("multiloop_two_orbits.emx"), "--from", "V", "--to", "W", "--porcelain"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("finite_dim=0\n", 0) == 0);
}

TEST_CASE("oracle verdict") {
    Run r = run({"oracle", scenario("multiloop_a1_same_point.emx"), "--from", "V1", "--to", "V3"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("oracle_dim=1 formula_dim=1 agree=yes\n", 0) == 0);
}

TEST_CASE("tensor and homdim") {
    CHECK(run({"tensor", "--g", "A2", "--l", "1,0", "--m", "0,1"}).out == "V(0,0) + V(1,1)\n");
    CHECK(run({"homdim", "--g", "A1", "--u", "adjoint", "--v", "1", "--w", "3", "--porcelain"}).out == "hom_dim=1\n");
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"ext", scenario("multiloop_two_orbits.emx"), "--from", "V", "--to", "nope"}).code == 2);
    CHECK(run({"tensor", "--g", "A2", "--l", "-1,0", "--m", "0,1"}).code == 2);
    Run nf = run({"blocks", scenario("onsager_sl2.emx"), "--points", "x1"});
    CHECK(nf.code == 3);
    CHECK(nf.out.empty());
    CHECK(nf.err.find("nonfinite") != std::string::npos);
}
