#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "agraded/exponents.hpp"

namespace agraded {

// ---------------------------------------------------------------------------
// A standard pair (r, l) of a monomial ideal I describes the translated
// orthant r + Z_{>=0}^l.  It is *standard* when that orthant lies inside the
// set T of standard monomials (exponents of monomials not in I) and is
// inclusion-maximal among all such orthants.  B(T), the set of all standard
// pairs, is finite and covers T.
// ---------------------------------------------------------------------------

/// A translated orthant r + Z_{>=0}^face with supp(r) disjoint from face.
struct StandardPair {
  ExponentVector root;
  Face face;

  StandardPair(ExponentVector r, Face f) : root(std::move(r)), face(f) {
    if (!root.support().disjoint(face))
      throw input_error("root support must be disjoint from the face");
  }

  /// Membership of a point: equal to the root outside the face.
  bool contains(const ExponentVector& a) const {
    root.require_same_length(a);
    for (int i = 0; i < a.size(); ++i)
      if (!face.contains(i) && a[i] != root[i]) return false;
    return true;
  }

  friend bool operator==(const StandardPair& a, const StandardPair& b) {
    return a.root == b.root && a.face == b.face;
  }
  friend bool operator!=(const StandardPair& a, const StandardPair& b) {
    return !(a == b);
  }
  friend bool operator<(const StandardPair& a, const StandardPair& b) {
    if (a.face != b.face) return a.face < b.face;
    return a.root < b.root;
  }
};

namespace detail {

/// Keep the inclusion-minimal bitmasks (also removes duplicates).
inline std::vector<uint64_t> antichain_min(std::vector<uint64_t> xs) {
  std::sort(xs.begin(), xs.end(), [](uint64_t a, uint64_t b) {
    int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<uint64_t> out;
  for (uint64_t x : xs) {
    bool dominated = false;
    for (uint64_t o : out)
      if ((o & x) == o) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(x);
  }
  return out;
}

/// All inclusion-minimal hitting sets of the given edges, by incremental
/// dualization: process one edge at a time, extending the transversals that
/// miss it and re-minimalizing.  An empty edge admits no hitting set.
inline std::vector<uint64_t> minimal_hitting_sets(std::vector<uint64_t> edges) {
  edges = antichain_min(std::move(edges));
  std::vector<uint64_t> trans = {0};
  for (uint64_t e : edges) {
    std::vector<uint64_t> pool;
    pool.reserve(trans.size() * 2);
    for (uint64_t t : trans) {
      if (t & e) {
        pool.push_back(t);
      } else {
        for (uint64_t rest = e; rest;) {
          uint64_t bit = rest & (~rest + 1);
          pool.push_back(t | bit);
          rest &= rest - 1;
        }
      }
    }
    trans = antichain_min(std::move(pool));
  }
  return trans;
}

}  // namespace detail

/// Is r + Z_{>=0}^l entirely outside I?  Equivalently: no generator's
/// restriction to the coordinates outside l divides the restriction of r.
inline bool admissible(const MonomialIdeal& ideal, const ExponentVector& root,
                       Face face) {
  if (root.size() != ideal.var_count())
    throw input_error("root length does not match ideal");
  if (!root.support().disjoint(face))
    throw input_error("root support overlaps the face");
  for (const auto& g : ideal.generators()) {
    bool blocked = false;
    for (int i = 0; i < root.size() && !blocked; ++i)
      if (!face.contains(i) && g[i] > root[i]) blocked = true;
    if (!blocked) return false;
  }
  return true;
}

/// Maximality via the one-step test: (r, l) is a standard pair iff it is
/// admissible and no single-coordinate extension (zero r_i, adjoin i to l)
/// is admissible.  Any strictly larger admissible orthant contains such an
/// extension, so this is equivalent to full inclusion-maximality.
inline bool is_standard_pair(const MonomialIdeal& ideal,
                             const ExponentVector& root, Face face) {
  if (!admissible(ideal, root, face)) return false;
  for (int i = 0; i < root.size(); ++i) {
    if (face.contains(i)) continue;
    ExponentVector r = root[i] == 0 ? root : root.with_coord(i, 0);
    if (admissible(ideal, r, face.with(i))) return false;
  }
  return true;
}

/// The finite set B(T) of standard pairs, with its source ideal.
class StandardPairBasis {
 public:
  StandardPairBasis(MonomialIdeal ideal, std::vector<StandardPair> pairs)
      : ideal_(std::move(ideal)), pairs_(std::move(pairs)) {
    std::sort(pairs_.begin(), pairs_.end());
  }

  const MonomialIdeal& ideal() const { return ideal_; }
  const std::vector<StandardPair>& pairs() const { return pairs_; }
  size_t size() const { return pairs_.size(); }

  /// Distinct faces occurring among the pairs, in canonical order.
  std::vector<Face> faces() const {
    std::set<Face> fs;
    for (const auto& p : pairs_) fs.insert(p.face);
    return {fs.begin(), fs.end()};
  }

 private:
  MonomialIdeal ideal_;
  std::vector<StandardPair> pairs_;
};

/// Compute B(T) for a proper monomial ideal.
///
/// Roots are enumerated over the box prod_i {0,...,max(D_i - 1, 0)} with D
/// the staircase bounds: a root coordinate >= D_i outside the face never
/// blocks a generator, so the one-step extension there stays admissible and
/// the pair cannot be maximal.  For a fixed root r the inclusion-maximal
/// admissible faces are the complements (inside the non-support coordinates)
/// of the minimal hitting sets of the blocking sets S_g = {i : g_i > r_i}.
inline StandardPairBasis compute_standard_pairs(const MonomialIdeal& ideal) {
  if (ideal.is_unit_ideal())
    throw input_error("the unit ideal has no standard pairs (T is empty)");
  const int n = ideal.var_count();
  const ExponentVector bounds = ideal.staircase_bounds();
  std::vector<int> root_box(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) root_box[static_cast<size_t>(i)] = std::max(bounds[i] - 1, 0);

  std::vector<StandardPair> pairs;
  std::vector<uint64_t> edges;
  for_each_point(ExponentVector(root_box), [&](const std::vector<int>& r) {
    uint64_t supp = 0;
    for (int i = 0; i < n; ++i)
      if (r[static_cast<size_t>(i)] > 0) supp |= uint64_t{1} << i;
    edges.clear();
    bool in_ideal = false;
    for (const auto& g : ideal.generators()) {
      uint64_t s = 0;
      for (int i = 0; i < n; ++i)
        if (g[i] > r[static_cast<size_t>(i)]) s |= uint64_t{1} << i;
      if (s == 0) {
        in_ideal = true;  // g divides r
        break;
      }
      if (s & supp) continue;  // blocked by the root itself
      edges.push_back(s);
    }
    if (in_ideal) return;
    const uint64_t universe = Face::full(n).mask() & ~supp;
    ExponentVector root(r);
    for (uint64_t h : detail::minimal_hitting_sets(edges)) {
      Face face = Face::from_mask(universe & ~h);
      if (is_standard_pair(ideal, root, face)) pairs.emplace_back(root, face);
    }
  });
  return StandardPairBasis(ideal, std::move(pairs));
}

/// The layer T(l): the union of the standard-pair orthants with face
/// exactly l, described by their roots.
struct Layer {
  Face face;
  std::vector<ExponentVector> roots;

  bool contains(const ExponentVector& a) const {
    for (const auto& r : roots) {
      bool match = true;
      for (int i = 0; i < a.size() && match; ++i)
        if (!face.contains(i) && a[i] != r[i]) match = false;
      if (match) return true;
    }
    return false;
  }
};

inline Layer layer(const StandardPairBasis& basis, Face face) {
  Layer out{face, {}};
  for (const auto& p : basis.pairs())
    if (p.face == face) out.roots.push_back(p.root);
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

/// The closure of T(l) under the componentwise partial order: the union of
/// r + Z_{>=0}^l over all r below some layer root.
class ClosedLayer {
 public:
  ClosedLayer(Face face, std::vector<ExponentVector> max_roots)
      : face_(face), max_roots_(std::move(max_roots)) {
    std::sort(max_roots_.begin(), max_roots_.end());
  }

  Face face() const { return face_; }
  const std::vector<ExponentVector>& max_roots() const { return max_roots_; }
  bool empty() const { return max_roots_.empty(); }

  /// Membership: below some layer root on every coordinate outside the face.
  bool contains(const ExponentVector& a) const {
    for (const auto& r : max_roots_) {
      bool below = true;
      for (int i = 0; i < a.size() && below; ++i)
        if (!face_.contains(i) && a[i] > r[i]) below = false;
      if (below) return true;
    }
    return false;
  }

  /// Every root of the closure: the union of the boxes [0, r] over the
  /// layer roots r.  Finite, enumerated in canonical order.
  std::vector<ExponentVector> roots() const {
    std::set<ExponentVector> out;
    for (const auto& r : max_roots_)
      for_each_point(r, [&](const std::vector<int>& a) {
        out.insert(ExponentVector(a));
      });
    return {out.begin(), out.end()};
  }

 private:
  Face face_;
  std::vector<ExponentVector> max_roots_;
};

inline ClosedLayer closed_layer(const StandardPairBasis& basis, Face face) {
  return ClosedLayer(face, layer(basis, face).roots);
}

/// Intersection of two standard-pair orthants.  Either empty (the roots
/// differ at some coordinate outside both faces) or again a translated
/// orthant, with face the intersection of the two faces and root taking the
/// values of the opposite pair's root on each face difference.
inline std::optional<StandardPair> intersect_pairs(const StandardPair& p,
                                                   const StandardPair& q) {
  if (p == q) throw input_error("intersect_pairs expects distinct pairs");
  p.root.require_same_length(q.root);
  const int n = p.root.size();
  Face common = p.face.intersect(q.face);
  std::vector<int> root(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    bool in_p = p.face.contains(i), in_q = q.face.contains(i);
    if (!in_p && !in_q) {
      if (p.root[i] != q.root[i]) return std::nullopt;
      root[static_cast<size_t>(i)] = p.root[i];
    } else if (in_p && !in_q) {
      root[static_cast<size_t>(i)] = q.root[i];
    } else if (!in_p && in_q) {
      root[static_cast<size_t>(i)] = p.root[i];
    }
  }
  return StandardPair(ExponentVector(std::move(root)), common);
}

/// All standard monomial exponents inside [0, box], by a depth-first sweep
/// that skips subtrees already divisible by a generator.
inline std::vector<ExponentVector> standard_monomials_in_box(
    const MonomialIdeal& ideal, const ExponentVector& box) {
  if (box.size() != ideal.var_count())
    throw input_error("box length does not match ideal");
  const int n = ideal.var_count();
  std::vector<ExponentVector> out;
  std::vector<int> a(static_cast<size_t>(n), 0);
  auto rec = [&](auto&& self, int depth) -> void {
    for (const auto& g : ideal.generators()) {
      bool satisfied = true;
      for (int i = 0; i < n && satisfied; ++i) {
        if (i < depth) {
          if (g[i] > a[static_cast<size_t>(i)]) satisfied = false;
        } else if (g[i] != 0) {
          satisfied = false;
        }
      }
      if (satisfied) return;  // entire subtree lies in the ideal
    }
    if (depth == n) {
      out.emplace_back(a);
      return;
    }
    for (int v = 0; v <= box[depth]; ++v) {
      a[static_cast<size_t>(depth)] = v;
      self(self, depth + 1);
    }
    a[static_cast<size_t>(depth)] = 0;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Does the basis cover exactly T inside [0, box]?  Both directions are
/// verified: every box point of T lies in some pair, and no pair reaches a
/// box point of the ideal.  Depth-first with subtree pruning, so boxes far
/// larger than the staircase stay cheap.
inline bool cover_check(const StandardPairBasis& basis,
                        const ExponentVector& box) {
  const MonomialIdeal& ideal = basis.ideal();
  if (box.size() != ideal.var_count())
    throw input_error("box length does not match ideal");
  const int n = ideal.var_count();
  const auto& pairs = basis.pairs();
  std::vector<int> a(static_cast<size_t>(n), 0);

  // pair status on the current subtree (prefix a[0..depth) decided)
  auto pair_feasible = [&](const StandardPair& p, int depth) {
    for (int i = 0; i < n; ++i) {
      if (p.face.contains(i)) continue;
      if (i < depth ? a[static_cast<size_t>(i)] != p.root[i] : p.root[i] > box[i])
        return false;
    }
    return true;
  };
  auto pair_covers_subtree = [&](const StandardPair& p, int depth) {
    if (!pair_feasible(p, depth)) return false;
    for (int i = depth; i < n; ++i)
      if (!p.face.contains(i)) return false;
    return true;
  };

  auto rec = [&](auto&& self, int depth) -> bool {
    bool gen_satisfied = false, gen_feasible = false;
    for (const auto& g : ideal.generators()) {
      bool sat = true, feas = true;
      for (int i = 0; i < n && feas; ++i) {
        if (i < depth) {
          if (g[i] > a[static_cast<size_t>(i)]) sat = feas = false;
        } else {
          if (g[i] > box[i]) feas = false;
          if (g[i] != 0) sat = false;
        }
      }
      gen_satisfied |= sat && feas;
      gen_feasible |= feas;
      if (gen_satisfied) break;
    }
    if (gen_satisfied) {
      // subtree inside the ideal: no pair may reach into it
      for (const auto& p : pairs)
        if (pair_feasible(p, depth)) return false;
      return true;
    }
    if (!gen_feasible) {
      // subtree entirely standard: some pair must cover all of it
      bool any_feasible = false;
      for (const auto& p : pairs) {
        if (pair_covers_subtree(p, depth)) return true;
        any_feasible |= pair_feasible(p, depth);
      }
      if (!any_feasible) return false;
      if (depth == n) return false;  // feasible == covering at a leaf
    }
    if (depth == n) {
      // mixed at a leaf cannot happen: all coordinates are decided
      ExponentVector pt(a);
      bool in_t = !ideal.contains(pt);
      bool covered = false;
      for (const auto& p : pairs) covered |= p.contains(pt);
      return in_t == covered;
    }
    for (int v = 0; v <= box[depth]; ++v) {
      a[static_cast<size_t>(depth)] = v;
      if (!self(self, depth + 1)) return false;
    }
    a[static_cast<size_t>(depth)] = 0;
    return true;
  };
  return rec(rec, 0);
}

}  // namespace agraded
