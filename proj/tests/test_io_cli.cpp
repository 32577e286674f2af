#include "agraded/io.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "agraded/cli.hpp"
#include "oracles.hpp"

using namespace agraded;

namespace {

TEST(ParseIdeal, MonomialAndBinomialGrammar) {
  auto f = io::parse_ideal("vars: x y\nx^2 y\n");
  EXPECT_FALSE(f.is_binomial());
  EXPECT_EQ(f.monomial_ideal(),
            MonomialIdeal::minimalize(2, {ExponentVector({2, 1})}));

  auto g = io::parse_ideal("vars: x y\nx^2 - x y\n");
  EXPECT_TRUE(g.is_binomial());
  ASSERT_EQ(g.binomials.size(), 1u);
  EXPECT_EQ(g.binomials[0].a, ExponentVector({2, 0}));
  EXPECT_EQ(g.binomials[0].b, ExponentVector({1, 1}));

  // comments, blank lines, repeated variables multiply, "1" is allowed
  auto h = io::parse_ideal("# header\nvars: x y\n\nx x y  # x^2 y\nx - 1\n");
  EXPECT_EQ(h.monomials[0], ExponentVector({2, 1}));
  EXPECT_EQ(h.binomials[0].b, ExponentVector({0, 0}));
}

TEST(ParseIdeal, ErrorsCarryLineNumbers) {
  try {
    io::parse_ideal("vars: x y\nx z\n");
    FAIL();
  } catch (const io::parse_error& e) {
    EXPECT_EQ(e.line_no, 2);
  }
  EXPECT_THROW(io::parse_ideal("vars: x\nx^-2\n"), io::parse_error);
  EXPECT_THROW(io::parse_ideal("vars: x\n- x\n"), io::parse_error);
  EXPECT_THROW(io::parse_ideal("vars: x\nx - x\n"), io::parse_error);
  EXPECT_THROW(io::parse_ideal("x y\n"), io::parse_error);
  EXPECT_THROW(io::parse_ideal("vars: x x\n"), io::parse_error);
}

TEST(ParseMatrix, GrammarAndErrors) {
  GradingMap m = io::parse_matrix("1 2\n1 1\n");
  EXPECT_EQ(m.target_rank(), 1);
  EXPECT_EQ(m.column(0), (std::vector<long long>{1}));

  GradingMap t = io::parse_matrix("2 3\n1 1 1\n0 1 2\n");
  EXPECT_EQ(t.column(2), (std::vector<long long>{1, 2}));

  EXPECT_THROW(io::parse_matrix("2 3\n1 1 1\n"), io::parse_error);
  EXPECT_THROW(io::parse_matrix("2 3\n1 1 1\n0 1 q\n"), io::parse_error);
}

TEST(RoundTrip, ParsePrintIsIdentity) {
  std::mt19937 rng(20240'601);
  for (int trial = 0; trial < 40; ++trial) {
    MonomialIdeal i = oracle::random_ideal(rng);
    std::string text = io::print_ideal(i);
    auto parsed = io::parse_ideal(text);
    EXPECT_EQ(parsed.monomial_ideal(), i);
    EXPECT_EQ(parsed.vars, i.variable_names());
    EXPECT_EQ(io::print_ideal(parsed.monomial_ideal()), text);  // byte-stable
  }
}

TEST(RoundTrip, BinomialIdeal) {
  BinomialIdeal b(2, {ExponentVector({1, 1})},
                  {PureBinomial(ExponentVector({2, 0}), ExponentVector({0, 2}))});
  std::string text = io::print_ideal(b);
  auto parsed = io::parse_ideal(text);
  EXPECT_EQ(parsed.monomials, b.monomial_gens);
  EXPECT_EQ(parsed.binomials, b.binomial_gens);
}

// ---- cli dispatch ----------------------------------------------------------

std::string data_path(const std::string& name) {
  return std::string(AGRADED_DATA_DIR) + "/" + name;
}

int run_cli(std::vector<std::string> args, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  int code = cli::run(std::move(args), out, err);
  if (out_text) *out_text = out.str();
  return code;
}

TEST(Cli, StdPairsOnRunningExample) {
  std::string out;
  int code = run_cli({"std-pairs", data_path("x2y.ideal")}, &out);
  EXPECT_EQ(code, 0);
  EXPECT_NE(out.find("(1, <x>)"), std::string::npos);
  EXPECT_NE(out.find("(x, <y>)"), std::string::npos);
  EXPECT_NE(out.find("# pairs=3"), std::string::npos);
}

TEST(Cli, ChainCheckExitCodes) {
  std::string out;
  EXPECT_EQ(run_cli({"chain-check", data_path("x2y.ideal")}, &out), 0);
  EXPECT_EQ(run_cli({"chain-check", data_path("counterexample.ideal")}, &out), 1);
  EXPECT_NE(out.find("violation: face <>"), std::string::npos);
  EXPECT_NE(out.find("# holds=false"), std::string::npos);
}

TEST(Cli, DecomposeAndVerify) {
  std::string out;
  EXPECT_EQ(run_cli({"decompose", data_path("x2y.ideal")}, &out), 0);
  EXPECT_NE(out.find("component <x>: (y)"), std::string::npos);
  EXPECT_NE(out.find("component <y>: (x^2)"), std::string::npos);
  EXPECT_NE(out.find("# verified=true"), std::string::npos);
}

TEST(Cli, VerifyAgradedRequiresBoxAndReports) {
  std::string out;
  int code = run_cli({"verify-agraded", data_path("counterexample.ideal"),
                      data_path("counterexample.matrix"), "--box", "3,3,3"},
                     &out);
  EXPECT_EQ(code, 0);
  EXPECT_NE(out.find("# pass=true"), std::string::npos);
}

TEST(Cli, ToricGbAndInitial) {
  std::string out;
  int code = run_cli({"toric-gb", data_path("twisted_conic.matrix"),
                      "--tiebreak", "2,1,3"},
                     &out);
  EXPECT_EQ(code, 0);
  EXPECT_NE(out.find("x2^2 - x1 x3"), std::string::npos);

  code = run_cli({"initial", data_path("twisted_conic.matrix"), "--tiebreak",
                  "2,1,3"},
                 &out);
  EXPECT_EQ(code, 0);
  EXPECT_NE(out.find("x2^2"), std::string::npos);
}

TEST(Cli, SaturatedCheck) {
  std::string out;
  int code = run_cli({"saturated-check", data_path("not_saturated.ideal"),
                      "--box", "5,5"},
                     &out);
  EXPECT_EQ(code, 1);
  EXPECT_NE(out.find("K(I) basis: (1,-1)"), std::string::npos);
  EXPECT_NE(out.find("witness: y - x"), std::string::npos);

  code = run_cli({"saturated-check", data_path("saturated_pair.ideal"),
                  "--box", "5,5"},
                 &out);
  EXPECT_EQ(code, 0);
  EXPECT_NE(out.find("K(I) basis: (2,-2)"), std::string::npos);
}

TEST(Cli, VerifyDecompositionBothKinds) {
  std::string out;
  EXPECT_EQ(run_cli({"verify-decomposition", data_path("x2y.ideal")}, &out), 0);
  EXPECT_EQ(run_cli({"verify-decomposition", data_path("saturated_pair.ideal"),
                     "--box", "5,5"},
                    &out),
            0);
}

TEST(Cli, EnumerateAgraded) {
  std::string out;
  int code = run_cli({"enumerate-agraded", data_path("sum_grading.matrix"),
                      "--bound", "3"},
                     &out);
  EXPECT_EQ(code, 0);
  EXPECT_NE(out.find("# candidates=2"), std::string::npos);
}

TEST(Cli, CounterexampleVerify) {
  std::string out;
  EXPECT_EQ(run_cli({"counterexample", "verify"}, &out), 0);
  EXPECT_NE(out.find("overall: PASS"), std::string::npos);
  EXPECT_NE(out.find("# pass=true"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  std::string out;
  EXPECT_EQ(run_cli({"no-such-command"}, &out), 2);
  EXPECT_EQ(run_cli({"std-pairs", "/nonexistent/file.ideal"}, &out), 2);
  EXPECT_EQ(run_cli({"verify-agraded", data_path("x2y.ideal"),
                     data_path("counterexample.matrix"), "--box", "2,2,2"},
                    &out),
            2);  // variable-count mismatch
}

}  // namespace
