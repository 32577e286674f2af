#include "agraded/grading.hpp"

#include <gtest/gtest.h>

#include <random>

#include "agraded/toric.hpp"
#include "oracles.hpp"

using namespace agraded;

namespace {

ExponentVector ev(std::vector<int> c) { return ExponentVector(std::move(c)); }

GradingMap map_of(int d, std::vector<std::vector<long long>> cols) {
  const int n = static_cast<int>(cols.size());
  return GradingMap(d, n, std::move(cols));
}

// columns (1,0), (1,1), (1,2)
GradingMap twisted_conic() { return map_of(2, {{1, 0}, {1, 1}, {1, 2}}); }

TEST(IsPointed, CertificateAndWitnessExamples) {
  auto p1 = is_pointed(map_of(1, {{1}, {-1}}));
  ASSERT_TRUE(std::holds_alternative<NonnegKernelWitness>(p1));
  EXPECT_EQ(std::get<NonnegKernelWitness>(p1).vector,
            (intlin::IVec{1, 1}));

  auto p2 = is_pointed(map_of(2, {{1, 0}, {0, 1}}));
  EXPECT_TRUE(std::holds_alternative<PointednessCertificate>(p2));
}

TEST(IsPointed, ReturnedObjectRevalidates) {
  std::mt19937 rng(20240'301);
  std::uniform_int_distribution<int> dd(1, 3), nd(1, 6), ed(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    int d = dd(rng), n = nd(rng);
    std::vector<std::vector<long long>> cols;
    for (int j = 0; j < n; ++j) {
      std::vector<long long> c(static_cast<size_t>(d));
      for (auto& x : c) x = ed(rng);
      cols.push_back(std::move(c));
    }
    GradingMap m = map_of(d, cols);
    auto p = is_pointed(m);
    if (std::holds_alternative<PointednessCertificate>(p)) {
      const auto& c = std::get<PointednessCertificate>(p).functional;
      for (int j = 0; j < n; ++j) {
        intlin::Rat s = 0;
        for (int k = 0; k < d; ++k)
          s += c[static_cast<size_t>(k)] *
               intlin::rat_of(cols[static_cast<size_t>(j)][static_cast<size_t>(k)]);
        EXPECT_GT(s, 0);
      }
    } else {
      const auto& w = std::get<NonnegKernelWitness>(p).vector;
      bool nonzero = false;
      for (const auto& x : w) {
        EXPECT_GE(x, 0);
        if (x != 0) nonzero = true;
      }
      EXPECT_TRUE(nonzero);
      for (int k = 0; k < d; ++k) {
        intlin::Int s = 0;
        for (int j = 0; j < n; ++j)
          s += w[static_cast<size_t>(j)] *
               intlin::int_of(cols[static_cast<size_t>(j)][static_cast<size_t>(k)]);
        EXPECT_EQ(s, 0);
      }
    }
  }
}

TEST(FiberEnumerate, SmallExamplesAndCompleteness) {
  auto f = fiber_enumerate(map_of(1, {{1}, {1}}), {2});
  EXPECT_EQ(f, (std::vector<ExponentVector>{ev({0, 2}), ev({1, 1}), ev({2, 0})}));

  EXPECT_THROW(fiber_enumerate(map_of(1, {{1}, {-1}}), {0}), input_error);

  std::mt19937 rng(20240'302);
  for (int trial = 0; trial < 30; ++trial) {
    GradingMap m = oracle::random_pointed_map(rng, 1 + static_cast<int>(rng() % 2),
                                              2 + static_cast<int>(rng() % 3));
    std::vector<long long> q(static_cast<size_t>(m.target_rank()));
    for (auto& x : q) x = static_cast<long long>(rng() % 7);
    auto fast = fiber_enumerate(m, q);
    // brute-force box: certificate weights are >= 1, so fiber entries are
    // bounded by the certificate value of q; all-ones certificate -> sum(q)
    long long bound = 0;
    for (long long x : q) bound += x;
    std::vector<int> box(static_cast<size_t>(m.var_count()),
                         static_cast<int>(bound));
    EXPECT_EQ(fast, oracle::fiber_bruteforce(m, q, ExponentVector(box)));
  }
}

TEST(VerifyAgraded, FailsWhenDegreeHasNoStandardMonomial) {
  // I = (x) with A = (1): degree 1 has no standard monomial
  MonomialIdeal i = MonomialIdeal::minimalize(1, {ev({1})});
  AgradedReport r = verify_agraded(i, map_of(1, {{1}}), {3});
  EXPECT_FALSE(r.pass);
  ASSERT_FALSE(r.violations.empty());
  EXPECT_EQ(r.violations[0].degree, (std::vector<long long>{1}));
  EXPECT_EQ(r.violations[0].standard_count, 0);
}

TEST(VerifyAgraded, CoherentInitialIdealPasses) {
  GradingMap m = twisted_conic();
  TermOrder order({1, 1, 1}, {1, 0, 2});  // y before x before z
  MonomialIdeal init = initial_ideal(toric_groebner(m, order));
  EXPECT_EQ(init.generators(), (std::vector<ExponentVector>{ev({0, 2, 0})}));
  EXPECT_TRUE(verify_agraded(init, m, {6, 6}).pass);
}

TEST(QuotientGroup, TrivialWhenFaceSpansColumnLattice) {
  GradingMap m = twisted_conic();
  QuotientGroup q = quotient_group(m, Face::of({0, 1}));  // columns (1,0),(1,1)
  EXPECT_TRUE(q.group().invariant_factors.empty());
  EXPECT_EQ(q.group().rank, 0);
  EXPECT_TRUE(q.residue({5, 3}).empty());
}

TEST(QuotientGroup, TorsionAndResidues) {
  // columns 2E_1, 2E_2 inside lattice Z^2 (via extra unit columns)
  GradingMap m = map_of(2, {{2, 0}, {0, 2}, {1, 0}, {0, 1}});
  QuotientGroup q = quotient_group(m, Face::of({0, 1}));
  EXPECT_EQ(q.group().invariant_factors, (std::vector<intlin::Int>{2, 2}));
  EXPECT_EQ(q.group().rank, 0);
  EXPECT_EQ(q.group().order(), 4);
  std::set<intlin::IVec> classes;
  classes.insert(q.residue({0, 0}));
  classes.insert(q.residue({1, 0}));
  classes.insert(q.residue({0, 1}));
  classes.insert(q.residue({1, 1}));
  EXPECT_EQ(classes.size(), 4u);
  EXPECT_EQ(q.residue({2, 3}), q.residue({0, 1}));
}

TEST(QuotientGroup, RejectsDegreesOutsideImageLattice) {
  GradingMap m = map_of(2, {{2, 0}, {0, 2}});
  QuotientGroup q = quotient_group(m, Face());
  EXPECT_EQ(q.group().rank, 2);  // free of rank 2, no face columns
  EXPECT_THROW(q.residue({1, 0}), input_error);
}

TEST(SmithNormalForm, TransformsRemultiplyExactly) {
  std::mt19937 rng(20240'303);
  std::uniform_int_distribution<int> sd(1, 4), ed(-6, 6);
  for (int trial = 0; trial < 120; ++trial) {
    size_t rows = static_cast<size_t>(sd(rng)), cols = static_cast<size_t>(sd(rng));
    intlin::IMat m(rows, intlin::IVec(cols));
    for (auto& row : m)
      for (auto& x : row) x = ed(rng);
    auto s = intlin::snf(m);
    // u * m * v == d, diagonal with divisibility chain
    intlin::IMat um(rows, intlin::IVec(cols, 0));
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j)
        for (size_t k = 0; k < rows; ++k) um[i][j] += s.u[i][k] * m[k][j];
    intlin::IMat umv(rows, intlin::IVec(cols, 0));
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j)
        for (size_t k = 0; k < cols; ++k) umv[i][j] += um[i][k] * s.v[k][j];
    EXPECT_EQ(umv, s.d);
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j)
        if (i != j) EXPECT_EQ(s.d[i][j], 0);
    for (size_t i = 0; i + 1 < std::min(rows, cols); ++i)
      if (s.d[i][i] != 0 && s.d[i + 1][i + 1] != 0)
        EXPECT_EQ(s.d[i + 1][i + 1] % s.d[i][i], 0);
  }
}

TEST(Triangulation, SingleRayAndTwoCellExamples) {
  // d=1, I=(y), A=(1,1): one ray
  MonomialIdeal iy = MonomialIdeal::minimalize(2, {ev({0, 1})});
  TriangulationReport r1 = triangulation(compute_standard_pairs(iy), map_of(1, {{1}, {1}}));
  EXPECT_TRUE(r1.valid);
  ASSERT_EQ(r1.cells.size(), 1u);
  EXPECT_EQ(r1.cells[0].rays, (std::vector<intlin::IVec>{{1}}));

  // initial ideal (x z) of the twisted conic: two cells meeting along (1,1)
  GradingMap m = twisted_conic();
  TermOrder xfirst({1, 1, 1}, {0, 1, 2});
  MonomialIdeal init = initial_ideal(toric_groebner(m, xfirst));
  EXPECT_EQ(init.generators(), (std::vector<ExponentVector>{ev({1, 0, 1})}));
  TriangulationReport r2 = triangulation(compute_standard_pairs(init), m);
  EXPECT_TRUE(r2.valid);
  EXPECT_EQ(r2.cells.size(), 2u);
  EXPECT_EQ(r2.cell_faces,
            (std::vector<Face>{Face::of({0, 1}), Face::of({1, 2})}));

  // the single-cell degeneration (y^2) of the same map
  TermOrder yfirst({1, 1, 1}, {1, 0, 2});
  MonomialIdeal inity = initial_ideal(toric_groebner(m, yfirst));
  TriangulationReport r3 = triangulation(compute_standard_pairs(inity), m);
  EXPECT_TRUE(r3.valid);
  EXPECT_EQ(r3.cells.size(), 1u);
}

TEST(Triangulation, FlagsNonSimplicialInput) {
  // zero ideal in 3 variables with a 2-dimensional map: the single face
  // {x,y,z} has three dependent rays
  MonomialIdeal zero = MonomialIdeal::minimalize(3, {});
  TriangulationReport r = triangulation(compute_standard_pairs(zero), twisted_conic());
  EXPECT_FALSE(r.valid);
}

TEST(EnumerateAgraded, ChainsAndIdentityAndOracleCount) {
  // A = (1,1): exactly the two coherent chain choices survive closure
  auto cands = enumerate_agraded(map_of(1, {{1}, {1}}), {3});
  ASSERT_EQ(cands.size(), 2u);
  std::set<std::vector<ExponentVector>> ideals;
  for (const auto& c : cands) ideals.insert(c.truncated_ideal.generators());
  EXPECT_TRUE(ideals.count({ev({0, 1})}));  // all x-powers standard -> ideal (y)
  EXPECT_TRUE(ideals.count({ev({1, 0})}));

  // identity map: fibers are singletons, unique all-standard candidate
  auto id = enumerate_agraded(map_of(2, {{1, 0}, {0, 1}}), {2, 2});
  ASSERT_EQ(id.size(), 1u);
  EXPECT_TRUE(id[0].truncated_ideal.is_zero_ideal());

  // A = (1,2,3), bound 8: candidate count matches the naive product filter
  GradingMap m123 = map_of(1, {{1}, {2}, {3}});
  auto fast = enumerate_agraded(m123, {8});
  size_t naive = oracle::agraded_candidates_bruteforce(m123, {8}, ev({8, 4, 2}));
  EXPECT_EQ(fast.size(), naive);
}

TEST(EnumerateAgraded, CandidatesAreDownwardClosedOnePerFiber) {
  std::mt19937 rng(20240'304);
  for (int trial = 0; trial < 10; ++trial) {
    GradingMap m = oracle::random_pointed_map(rng, 1, 3, 2);
    auto cands = enumerate_agraded(m, {5});
    for (const auto& c : cands) {
      std::set<ExponentVector> s(c.standard.begin(), c.standard.end());
      std::map<std::vector<long long>, int> per_fiber;
      for (const auto& a : c.standard) {
        ++per_fiber[m.apply(a)];
        for (int i = 0; i < a.size(); ++i)
          if (a[i] > 0) EXPECT_TRUE(s.count(a.with_coord(i, a[i] - 1)));
      }
      for (const auto& [q, k] : per_fiber) EXPECT_EQ(k, 1);
    }
  }
}

}  // namespace
