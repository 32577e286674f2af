#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "agraded/decomposition.hpp"
#include "agraded/grading.hpp"
#include "agraded/standard_pairs.hpp"

namespace agraded::counterexample {

// ---------------------------------------------------------------------------
// A 16-variable A-graded monomial ideal with d = 3 whose associated primes
// violate the chain property: the faces occurring in B(T) are the empty set,
// the three pairs {e_i, e_{i+1}}, and {e_1, e_2, e_3}, so the empty face has
// no one-larger superset.  Everything below is hard-coded data plus the
// verification pipeline.
// ---------------------------------------------------------------------------

inline constexpr int kVarCount = 16;

// variable layout: e1 e2 e3 f1 f2 f3 g1 g2 g3 k1 ... k7, cyclic index i in
// {0,1,2} with explicit successor/predecessor tables
inline int e_var(int i) { return i; }
inline int f_var(int i) { return 3 + i; }
inline int g_var(int i) { return 6 + i; }
inline int k_var(int nu) { return 9 + nu; }  // nu in 0..6
inline int next3(int i) { return (i + 1) % 3; }
inline int prev3(int i) { return (i + 2) % 3; }

inline std::vector<std::string> variable_names() {
  std::vector<std::string> names;
  for (int i = 1; i <= 3; ++i) names.push_back("e" + std::to_string(i));
  for (int i = 1; i <= 3; ++i) names.push_back("f" + std::to_string(i));
  for (int i = 1; i <= 3; ++i) names.push_back("g" + std::to_string(i));
  for (int nu = 1; nu <= 7; ++nu) names.push_back("k" + std::to_string(nu));
  return names;
}

namespace detail {

inline ExponentVector product_of(std::initializer_list<int> vars) {
  std::vector<int> c(kVarCount, 0);
  for (int v : vars) c[static_cast<size_t>(v)] += 1;
  return ExponentVector(std::move(c));
}

}  // namespace detail

/// The 100 generators, family by family.
inline MonomialIdeal ideal() {
  using detail::product_of;
  std::set<ExponentVector> gens;
  // all products of an f or g with a k, all products of two g's or two k's
  // (squares included)
  for (int i = 0; i < 3; ++i)
    for (int nu = 0; nu < 7; ++nu) {
      gens.insert(product_of({f_var(i), k_var(nu)}));
      gens.insert(product_of({g_var(i), k_var(nu)}));
    }
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) gens.insert(product_of({g_var(i), g_var(j)}));
  for (int nu = 0; nu < 7; ++nu)
    for (int mu = nu; mu < 7; ++mu)
      gens.insert(product_of({k_var(nu), k_var(mu)}));
  for (int i = 0; i < 3; ++i) {
    gens.insert(product_of({f_var(i), f_var(i)}));
    gens.insert(product_of({f_var(i), g_var(next3(i))}));
    gens.insert(product_of({f_var(prev3(i)), f_var(i), g_var(prev3(i))}));
    gens.insert(product_of({f_var(i), g_var(i), e_var(prev3(i))}));
    gens.insert(product_of({f_var(next3(i)), g_var(i), e_var(prev3(i))}));
    gens.insert(product_of({f_var(i), f_var(next3(i)), e_var(prev3(i))}));
    gens.insert(product_of({f_var(i), e_var(prev3(i)), e_var(next3(i))}));
    gens.insert(product_of({g_var(i), e_var(prev3(i)), e_var(next3(i))}));
  }
  return MonomialIdeal::minimalize(
      kVarCount, std::vector<ExponentVector>(gens.begin(), gens.end()),
      variable_names());
}

/// e_i -> 2E_i, f_i -> E_i, g_i -> E_i + (1,1,1), and the seven k-images.
inline GradingMap grading() {
  std::vector<std::vector<long long>> cols(kVarCount);
  for (int i = 0; i < 3; ++i) {
    std::vector<long long> e(3, 0), f(3, 0), g(3, 1);
    e[static_cast<size_t>(i)] = 2;
    f[static_cast<size_t>(i)] = 1;
    g[static_cast<size_t>(i)] += 1;
    cols[static_cast<size_t>(e_var(i))] = e;
    cols[static_cast<size_t>(f_var(i))] = f;
    cols[static_cast<size_t>(g_var(i))] = g;
  }
  const long long k_images[7][3] = {{3, 2, 2}, {2, 3, 2}, {2, 2, 3}, {2, 3, 3},
                                    {3, 2, 3}, {3, 3, 2}, {3, 3, 3}};
  for (int nu = 0; nu < 7; ++nu)
    cols[static_cast<size_t>(k_var(nu))] = {k_images[nu][0], k_images[nu][1],
                                            k_images[nu][2]};
  return GradingMap(3, kVarCount, std::move(cols));
}

struct CounterexampleData {
  std::vector<std::string> variables;
  MonomialIdeal ideal;
  GradingMap grading;
};

inline CounterexampleData build() {
  return CounterexampleData{variable_names(), ideal(), grading()};
}

/// The 30 standard pairs, transcribed family by family.
inline std::vector<StandardPair> expected_standard_pairs() {
  using detail::product_of;
  std::vector<StandardPair> pairs;
  const Face e_face = Face::of({e_var(0), e_var(1), e_var(2)});
  for (int nu = 0; nu < 7; ++nu)
    pairs.emplace_back(product_of({k_var(nu)}), e_face);  // roots k_nu, full e-face
  pairs.emplace_back(ExponentVector::zero(kVarCount), e_face);
  for (int i = 0; i < 3; ++i) {
    const Face fc = Face::of({e_var(i), e_var(next3(i))});
    pairs.emplace_back(product_of({f_var(i), f_var(next3(i))}), fc);
    pairs.emplace_back(product_of({f_var(i), g_var(i)}), fc);
    pairs.emplace_back(product_of({f_var(next3(i)), g_var(i)}), fc);
    pairs.emplace_back(product_of({g_var(next3(i))}), fc);
    pairs.emplace_back(product_of({f_var(i)}), fc);
    pairs.emplace_back(product_of({f_var(next3(i))}), fc);
    pairs.emplace_back(product_of({g_var(i)}), fc);
  }
  pairs.emplace_back(product_of({f_var(0), f_var(1), f_var(2)}), Face());
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

/// Pairs whose orthant is maximal under the componentwise order on roots
/// within a fixed face (no other pair with the same face dominates).
inline std::vector<StandardPair> dominant_pairs(
    const std::vector<StandardPair>& pairs) {
  std::vector<StandardPair> out;
  for (const auto& p : pairs) {
    bool dominated = false;
    for (const auto& q : pairs)
      if (q.face == p.face && q.root != p.root && p.root.divides(q.root))
        dominated = true;
    if (!dominated) out.push_back(p);
  }
  return out;
}

struct CounterexampleReport {
  bool pointed = false;
  intlin::RVec certificate;

  size_t computed_pair_count = 0;
  bool pairs_match = false;

  std::vector<Face> primes;
  bool primes_match = false;
  ChainReport chain;
  bool chain_violated_exactly_at_empty = false;

  AgradedReport agraded;
  ExponentVector missing_triple_preimage;  // the standard monomial of degree (1,1,1)
  bool missing_triple_ok = false;

  TriangulationReport triangulation;
  bool single_octant_cell = false;

  FiniteAbelianGroup quotient;
  bool quotient_bijection = false;

  size_t dominant_pair_count = 0;

  bool pass = false;
};

/// Run the whole verification pipeline on the hard-coded data.
inline CounterexampleReport verify() {
  CounterexampleReport report;
  CounterexampleData data = build();

  auto pointedness = is_pointed(data.grading);
  report.pointed = std::holds_alternative<PointednessCertificate>(pointedness);
  if (report.pointed)
    report.certificate = std::get<PointednessCertificate>(pointedness).functional;

  StandardPairBasis basis = compute_standard_pairs(data.ideal);
  report.computed_pair_count = basis.size();
  std::vector<StandardPair> expected = expected_standard_pairs();
  report.pairs_match = basis.pairs() == expected;
  report.dominant_pair_count = dominant_pairs(basis.pairs()).size();

  report.primes = associated_primes(basis);
  {
    const Face e_face = Face::of({e_var(0), e_var(1), e_var(2)});
    std::vector<Face> want = {Face(),
                              Face::of({e_var(0), e_var(1)}),
                              Face::of({e_var(1), e_var(2)}),
                              Face::of({e_var(2), e_var(0)}),
                              e_face};
    std::sort(want.begin(), want.end());
    report.primes_match = report.primes == want;
  }
  report.chain = chain_check(basis);
  report.chain_violated_exactly_at_empty =
      !report.chain.holds && report.chain.violations == std::vector<Face>{Face()};

  report.agraded = verify_agraded(data.ideal, data.grading, {6, 6, 6});
  {
    auto fiber = fiber_enumerate(data.grading, {1, 1, 1});
    ExponentVector triple =
        detail::product_of({f_var(0), f_var(1), f_var(2)});
    report.missing_triple_ok = fiber == std::vector<ExponentVector>{triple};
    if (report.missing_triple_ok) report.missing_triple_preimage = triple;
  }

  report.triangulation = triangulation(basis, data.grading);
  report.single_octant_cell =
      report.triangulation.valid && report.triangulation.cells.size() == 1 &&
      report.triangulation.cell_faces ==
          std::vector<Face>{Face::of({e_var(0), e_var(1), e_var(2)})};

  {
    const Face e_face = Face::of({e_var(0), e_var(1), e_var(2)});
    QuotientGroup q = quotient_group(data.grading, e_face);
    report.quotient = q.group();
    bool shape_ok = report.quotient.rank == 0 &&
                    report.quotient.invariant_factors ==
                        std::vector<intlin::Int>{2, 2, 2};
    std::set<intlin::IVec> classes;
    for (const auto& root : layer(basis, e_face).roots)
      classes.insert(q.residue(data.grading.apply(root)));
    report.quotient_bijection = shape_ok && classes.size() == 8;
  }

  report.pass = report.pointed && report.pairs_match && report.primes_match &&
                report.chain_violated_exactly_at_empty && report.agraded.pass &&
                report.missing_triple_ok && report.single_octant_cell &&
                report.quotient_bijection;
  return report;
}

}  // namespace agraded::counterexample
