#include "agraded/counterexample.hpp"

#include <gtest/gtest.h>

#include <fstream>

#include "agraded/io.hpp"

using namespace agraded;
namespace ce = agraded::counterexample;

namespace {

TEST(Counterexample, HundredGeneratorsAllMinimal) {
  MonomialIdeal ideal = ce::ideal();
  EXPECT_EQ(ideal.generators().size(), 100u);
  // pairwise incomparability is the minimality certificate
  const auto& gens = ideal.generators();
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = 0; j < gens.size(); ++j)
      if (i != j) EXPECT_FALSE(gens[i].divides(gens[j]));
  // every generator uses at most degree 3 and exponents at most 2
  ExponentVector bounds = ideal.staircase_bounds();
  for (int i = 0; i < 16; ++i) EXPECT_LE(bounds[i], 2);
}

TEST(Counterexample, GradingImages) {
  GradingMap map = ce::grading();
  EXPECT_EQ(map.apply(ExponentVector::unit(16, ce::e_var(0))),
            (std::vector<long long>{2, 0, 0}));
  EXPECT_EQ(map.apply(ExponentVector::unit(16, ce::g_var(1))),
            (std::vector<long long>{1, 2, 1}));
  EXPECT_EQ(map.apply(ExponentVector::unit(16, ce::k_var(6))),
            (std::vector<long long>{3, 3, 3}));
  EXPECT_EQ(map.apply(ExponentVector::unit(16, ce::k_var(0))),
            (std::vector<long long>{3, 2, 2}));
}

TEST(Counterexample, PointedWithAllOnesFunctional) {
  GradingMap map = ce::grading();
  // direct evaluation: every column has positive coordinate sum
  for (int j = 0; j < 16; ++j) {
    long long s = 0;
    for (long long x : map.column(j)) s += x;
    EXPECT_GT(s, 0);
  }
  EXPECT_TRUE(pointed(map));
}

TEST(Counterexample, ExpectedPairListShape) {
  auto pairs = ce::expected_standard_pairs();
  EXPECT_EQ(pairs.size(), 30u);
  std::map<int, int> by_face_size;
  for (const auto& p : pairs) ++by_face_size[p.face.size()];
  EXPECT_EQ(by_face_size[0], 1);   // the isolated root f1+f2+f3
  EXPECT_EQ(by_face_size[2], 21);  // the {e_i, e_{i+1}} families
  EXPECT_EQ(by_face_size[3], 8);   // 0 and the seven k roots
  // the chain-breaking pair
  ExponentVector triple = ExponentVector::unit(16, ce::f_var(0)) +
                          ExponentVector::unit(16, ce::f_var(1)) +
                          ExponentVector::unit(16, ce::f_var(2));
  EXPECT_TRUE(std::count(pairs.begin(), pairs.end(), StandardPair(triple, Face())));
  // a sample k pair
  EXPECT_TRUE(std::count(
      pairs.begin(), pairs.end(),
      StandardPair(ExponentVector::unit(16, ce::k_var(2)),
                   Face::of({ce::e_var(0), ce::e_var(1), ce::e_var(2)}))));
}

TEST(Counterexample, ComputedPairsEqualTranscription) {
  StandardPairBasis basis = compute_standard_pairs(ce::ideal());
  EXPECT_EQ(basis.pairs(), ce::expected_standard_pairs());
}

TEST(Counterexample, FacesSmallAndMaximalFaceCarriesZeroRoot) {
  StandardPairBasis basis = compute_standard_pairs(ce::ideal());
  const Face e_face = Face::of({ce::e_var(0), ce::e_var(1), ce::e_var(2)});
  for (const Face& f : basis.faces()) EXPECT_LE(f.size(), 3);
  // the unique inclusion-maximal face is <e1,e2,e3> and (0, e_face) occurs
  EXPECT_TRUE(std::count(basis.pairs().begin(), basis.pairs().end(),
                         StandardPair(ExponentVector::zero(16), e_face)));
  for (const Face& f : basis.faces()) {
    bool maximal = true;
    for (const Face& g : basis.faces())
      if (f != g && f.subset_of(g)) maximal = false;
    EXPECT_EQ(maximal, f == e_face);
  }
}

TEST(Counterexample, MembershipAndFiberSpotChecks) {
  MonomialIdeal ideal = ce::ideal();
  GradingMap map = ce::grading();
  ExponentVector triple = ExponentVector::unit(16, ce::f_var(0)) +
                          ExponentVector::unit(16, ce::f_var(1)) +
                          ExponentVector::unit(16, ce::f_var(2));
  EXPECT_FALSE(ideal.contains(triple));  // f1 f2 f3 is standard
  EXPECT_EQ(fiber_enumerate(map, {1, 1, 1}),
            (std::vector<ExponentVector>{triple}));
  // the fiber of (3,2,2) contains k1 and also g1 f1 f2 f3
  auto fiber = fiber_enumerate(map, {3, 2, 2});
  ExponentVector k1 = ExponentVector::unit(16, ce::k_var(0));
  ExponentVector other = ExponentVector::unit(16, ce::g_var(0)) + triple;
  EXPECT_TRUE(std::count(fiber.begin(), fiber.end(), k1));
  EXPECT_TRUE(std::count(fiber.begin(), fiber.end(), other));
  // exactly one fiber member is standard, namely k1
  int standard = 0;
  for (const auto& a : fiber)
    if (!ideal.contains(a)) ++standard;
  EXPECT_EQ(standard, 1);
  EXPECT_FALSE(ideal.contains(k1));
}

TEST(Counterexample, FullVerificationPasses) {
  auto report = ce::verify();
  EXPECT_TRUE(report.pointed);
  EXPECT_EQ(report.computed_pair_count, 30u);
  EXPECT_TRUE(report.pairs_match);
  EXPECT_EQ(report.dominant_pair_count, 20u);
  EXPECT_TRUE(report.primes_match);
  EXPECT_FALSE(report.chain.holds);
  EXPECT_TRUE(report.chain_violated_exactly_at_empty);
  EXPECT_TRUE(report.agraded.pass);
  EXPECT_EQ(report.agraded.degrees_checked, 343);
  EXPECT_TRUE(report.missing_triple_ok);
  EXPECT_TRUE(report.single_octant_cell);
  EXPECT_TRUE(report.quotient_bijection);
  EXPECT_TRUE(report.pass);
}

TEST(Counterexample, CoverAndDecompositionOnAllTwoBox) {
  StandardPairBasis basis = compute_standard_pairs(ce::ideal());
  std::vector<int> box(16, 2);
  EXPECT_TRUE(cover_check(basis, ExponentVector(box)));

  auto comps = primary_decomposition(basis);
  EXPECT_EQ(comps.size(), 5u);
  for (const auto& c : comps) EXPECT_TRUE(is_primary_monomial(c.ideal));
  // the empty-face component has the maximal ideal as its radical
  for (const auto& c : comps)
    if (c.face.empty()) {
      Face pure;
      for (const auto& g : c.ideal.generators())
        if (g.support().size() == 1) pure = pure.unite(g.support());
      EXPECT_EQ(pure, Face::full(16));
    }
  std::vector<int> box3(16, 3);
  EXPECT_TRUE(verify_decomposition(ce::ideal(), comps, ExponentVector(box3)));
}

TEST(Counterexample, ShippedFilesMatchBuiltData) {
  auto file = io::load_ideal(std::string(AGRADED_DATA_DIR) + "/counterexample.ideal");
  EXPECT_EQ(file.monomial_ideal(), ce::ideal());
  EXPECT_EQ(file.vars, ce::variable_names());
  GradingMap map = io::load_matrix(std::string(AGRADED_DATA_DIR) + "/counterexample.matrix");
  EXPECT_TRUE(map == ce::grading());
}

}  // namespace
