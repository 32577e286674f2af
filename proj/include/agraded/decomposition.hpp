#pragma once

#include <algorithm>
#include <vector>

#include "agraded/standard_pairs.hpp"

namespace agraded {

// ---------------------------------------------------------------------------
// Primary decomposition of a monomial ideal from its standard pairs.  For
// each face l occurring in B(T) the component I^(l) is generated by the
// monomials outside the closure of the layer T(l); its radical is the prime
// P^(l) = (x_i | i not in l) of height n - |l|.  A face version of the chain
// property falls out: P^(l') is contained in P^(l) iff l is contained in l',
// so a non-minimal associated prime corresponds to a non-maximal face, and
// "height one less" corresponds to "one more face element".
// ---------------------------------------------------------------------------

/// One primary component I^(face) of a monomial ideal.
struct PrimaryComponent {
  Face face;
  MonomialIdeal ideal;
};

/// Generators of I^(l): the minimal monomials outside the closed layer.
/// The complement is an up-set constant along l, so scanning the box
/// [0, max-root + 1] on the coordinates outside l is exact.
inline PrimaryComponent component_ideal(const StandardPairBasis& basis,
                                        Face face) {
  const MonomialIdeal& ideal = basis.ideal();
  const int n = ideal.var_count();
  ClosedLayer closure = closed_layer(basis, face);
  if (closure.empty())
    throw input_error(
        "no standard pair carries this face; the component would be the unit ideal");
  std::vector<int> box(static_cast<size_t>(n), 0);
  for (const auto& r : closure.max_roots())
    for (int i = 0; i < n; ++i)
      if (!face.contains(i))
        box[static_cast<size_t>(i)] =
            std::max(box[static_cast<size_t>(i)], r[i] + 1);
  std::vector<ExponentVector> gens;
  for_each_point(ExponentVector(box), [&](const std::vector<int>& a) {
    ExponentVector pt(a);
    if (!closure.contains(pt)) gens.push_back(std::move(pt));
  });
  return PrimaryComponent{
      face, MonomialIdeal::minimalize(n, std::move(gens),
                                      ideal.variable_names())};
}

/// Monomial-primary criterion: every variable dividing a minimal generator
/// must have a pure power among the generators.
inline bool is_primary_monomial(const MonomialIdeal& ideal) {
  if (ideal.is_unit_ideal())
    throw input_error("primariness is undefined for the unit ideal");
  Face vars;
  for (const auto& g : ideal.generators()) vars = vars.unite(g.support());
  for (int i : vars.members()) {
    bool pure_power = false;
    for (const auto& g : ideal.generators())
      if (g.support() == Face::of({i})) {
        pure_power = true;
        break;
      }
    if (!pure_power) return false;
  }
  return true;
}

/// The faces occurring in B(T); face l stands for the associated prime
/// P^(l) = (x_i | i not in l), of height n - |l|.
inline std::vector<Face> associated_primes(const StandardPairBasis& basis) {
  return basis.faces();
}

struct ChainReport {
  std::vector<Face> faces;       // all faces occurring in B(T)
  std::vector<Face> violations;  // non-maximal faces without a one-larger superset
  bool holds = false;
};

/// Chain property audit: every face that is not inclusion-maximal among the
/// occurring faces must have a superset face with exactly one more element.
/// All violating faces are reported.
inline ChainReport chain_check(const StandardPairBasis& basis) {
  ChainReport report;
  report.faces = associated_primes(basis);
  for (const Face& f : report.faces) {
    bool maximal = true;
    for (const Face& g : report.faces)
      if (f != g && f.subset_of(g)) maximal = false;
    if (maximal) continue;
    bool has_cover = false;
    for (const Face& g : report.faces)
      if (f.subset_of(g) && g.size() == f.size() + 1) {
        has_cover = true;
        break;
      }
    if (!has_cover) report.violations.push_back(f);
  }
  report.holds = report.violations.empty();
  return report;
}

namespace detail {

// Depth-first equality check of "a in I" versus "a in every component" over
// [0, box], pruning any subtree on which all memberships are constant.
inline bool intersection_matches(const MonomialIdeal& ideal,
                                 const std::vector<const MonomialIdeal*>& comps,
                                 const ExponentVector& box) {
  const int n = ideal.var_count();
  std::vector<int> a(static_cast<size_t>(n), 0);
  // 0: false on the whole subtree, 1: true, 2: undecided
  auto status = [&](const MonomialIdeal& m, int depth) -> int {
    bool any_feasible = false;
    for (const auto& g : m.generators()) {
      bool sat = true, feas = true;
      for (int i = 0; i < n && feas; ++i) {
        if (i < depth) {
          if (g[i] > a[static_cast<size_t>(i)]) sat = feas = false;
        } else {
          if (g[i] > box[i]) feas = false;
          if (g[i] != 0) sat = false;
        }
      }
      if (sat && feas) return 1;
      any_feasible |= feas;
    }
    return any_feasible ? 2 : 0;
  };
  auto rec = [&](auto&& self, int depth) -> bool {
    int si = status(ideal, depth);
    bool all_decided = si != 2;
    bool in_all = true;
    for (const auto* c : comps) {
      int sc = status(*c, depth);
      if (sc == 2) {
        all_decided = false;
        break;
      }
      in_all = in_all && sc == 1;
    }
    if (all_decided) return (si == 1) == in_all;
    for (int v = 0; v <= box[depth]; ++v) {
      a[static_cast<size_t>(depth)] = v;
      if (!self(self, depth + 1)) return false;
    }
    a[static_cast<size_t>(depth)] = 0;
    return true;
  };
  return rec(rec, 0);
}

}  // namespace detail

/// Check I = intersection of the components on every point of [0, box].
inline bool verify_decomposition(const MonomialIdeal& ideal,
                                 const std::vector<PrimaryComponent>& components,
                                 const ExponentVector& box) {
  if (box.size() != ideal.var_count())
    throw input_error("box length does not match ideal");
  std::vector<const MonomialIdeal*> comps;
  comps.reserve(components.size());
  for (const auto& c : components) comps.push_back(&c.ideal);
  return detail::intersection_matches(ideal, comps, box);
}

/// All components of the decomposition, one per face of B(T).
inline std::vector<PrimaryComponent> primary_decomposition(
    const StandardPairBasis& basis) {
  std::vector<PrimaryComponent> out;
  for (const Face& f : basis.faces()) out.push_back(component_ideal(basis, f));
  return out;
}

/// flags[i] is true when dropping component i preserves the intersection on
/// the box.  The decomposition is not irredundant by construction, so this
/// is reported rather than enforced.
inline std::vector<bool> redundancy_flags(
    const MonomialIdeal& ideal, const std::vector<PrimaryComponent>& components,
    const ExponentVector& box) {
  std::vector<bool> flags(components.size(), false);
  for (size_t k = 0; k < components.size(); ++k) {
    std::vector<const MonomialIdeal*> rest;
    for (size_t j = 0; j < components.size(); ++j)
      if (j != k) rest.push_back(&components[j].ideal);
    flags[k] = detail::intersection_matches(ideal, rest, box);
  }
  return flags;
}

}  // namespace agraded
