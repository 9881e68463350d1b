#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cobord/cli.hpp"
#include "cobord/expr.hpp"

using namespace cobord;

namespace {

const FGLContext& ctx3() {
    static FGLContext c(3, 6);
    return c;
}
const OmegaRing& ring3() {
    static OmegaRing r(ctx3());
    return r;
}

int run_cli(const std::vector<std::string>& args) {
    std::vector<std::string> full = {"cobordism-forge"};
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : full) argv.push_back(s.c_str());
    return cobord::run(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("parser handles precedence, powers and unary minus") {
    const OmegaRing& R = ring3();
    auto ev = [&](const std::string& s) {
        return eval_omega(parse_expr(s, ExprMode::Omega, 3), R);
    };
    CHECK(ev("q(1)^2") == ev("q(1)*q(1)"));
    CHECK(ev("-q(2) + 2*q(2)") == ev("q(2)"));
    CHECK(ev("(q(2) + d(0,0,2))^2") ==
          ev("q(2)^2 + 2*q(2)*d(0,0,2) + d(0,0,2)*d(0,0,2)"));
    CHECK(ev("3") == R.unit_elt().scaled(GradedRational::integer(3)));
    CHECK(ev("q(0)").is_zero());
}

TEST_CASE("parse errors carry 1-based positions") {
    CHECK_THROWS_AS(parse_expr("q(", ExprMode::Omega, 3), ParseError);
    try {
        parse_expr("q(1) +", ExprMode::Omega, 3);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.col == 7);
    }
    // Omega mode rejects the excluded generator family and the mu-only atoms
    CHECK_THROWS_AS(parse_expr("d(0,2,1)", ExprMode::Omega, 3), ParseError);
    CHECK_THROWS_AS(parse_expr("eta(2)", ExprMode::Omega, 3), ParseError);
    CHECK_THROWS_AS(parse_expr("u", ExprMode::Omega, 3), ParseError);
    // index range validation against p
    CHECK_THROWS_AS(parse_expr("d(0,0,3)", ExprMode::Omega, 3), ParseError);
    CHECK_NOTHROW(parse_expr("d(0,2,1)*u*eta(2)", ExprMode::Mu, 3));
}

TEST_CASE("print and parse round-trip on normal forms") {
    const OmegaRing& R = ring3();
    const FGLContext& c = ctx3();
    std::vector<PresentationElement> samples = {
        R.multiply(R.q_elt(2), R.q_elt(2)),
        R.multiply(R.d_elt(0, 1, 2), R.d_elt(1, 0, 2)),
        R.q_elt(3).scaled(c.p_series_coeff(2)) + R.d_elt(0, 0, 2),
    };
    for (const auto& x : samples) {
        std::string s = print_element(x, c);
        PresentationElement y = eval_omega(parse_expr(s, ExprMode::Omega, 3), R);
        CHECK(y == x);
        CHECK(print_element(y, c) == s);
    }
}

TEST_CASE("cli computes normal forms and pins the spec example") {
    std::string out = "/tmp/cf_test_nf.txt";
    int rc = run_cli({"nf", "--prime", "2", "--max-degree", "6", "--out", out, "q(2)*q(2)"});
    CHECK(rc == 0);
    CHECK(slurp(out) == "(2*a(1,2))*q(1) + (a(1,1))*q(2) + (-2)*q(3)\n");
    std::remove(out.c_str());
}

TEST_CASE("cli exit codes: usage errors give 2") {
    CHECK(run_cli({}) == 2);
    CHECK(run_cli({"nf", "q(1)"}) == 2);                       // missing --prime
    CHECK(run_cli({"nf", "--prime", "3"}) == 2);               // missing expression
    CHECK(run_cli({"nf", "--prime", "3", "q(1)+"}) == 2);      // malformed expression
    CHECK(run_cli({"nf", "--prime", "3", "d(0,0,1)"}) == 2);   // excluded generator
    CHECK(run_cli({"tables", "--prime", "3", "--format", "xml"}) == 2);
}

TEST_CASE("cli exit code 3 on truncation overflow") {
    // the product has degree far past 2*max-degree, so rewriting must consult
    // table entries outside the certified window
    int rc = run_cli({"nf", "--prime", "3", "--max-degree", "2", "d(3,3,2)*d(3,3,2)"});
    CHECK(rc == 3);
}

TEST_CASE("cli verify output is byte-identical for a fixed seed") {
    std::string f1 = "/tmp/cf_test_v1.json";
    std::string f2 = "/tmp/cf_test_v2.json";
    std::vector<std::string> args = {"verify",     "--prime", "3",    "--max-degree", "4",
                                     "--format",   "json",    "--seed", "2026"};
    auto a1 = args; a1.push_back("--out"); a1.push_back(f1);
    auto a2 = args; a2.push_back("--out"); a2.push_back(f2);
    CHECK(run_cli(a1) == 0);
    CHECK(run_cli(a2) == 0);
    std::string s1 = slurp(f1), s2 = slurp(f2);
    CHECK(!s1.empty());
    CHECK(s1 == s2);
    std::remove(f1.c_str());
    std::remove(f2.c_str());
}

TEST_CASE("cli tables csv pins") {
    std::string out = "/tmp/cf_test_tables.csv";
    CHECK(run_cli({"tables", "--prime", "5", "--max-degree", "2", "--format", "csv", "--out",
                   out}) == 0);
    std::string csv = slurp(out);
    CHECK(csv.rfind("symbol,i,l,j,degree,value", 0) == 0);
    CHECK(csv.find("t,2,0,-1,0,3") != std::string::npos);  // t_{0,-1}^{(2)} = 2^{-1} rep
    CHECK(csv.find("c,,,1,0,5") != std::string::npos);     // c_1 = p
    std::remove(out.c_str());
}
