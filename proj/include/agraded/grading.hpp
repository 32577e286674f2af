#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "agraded/exponents.hpp"
#include "agraded/intlin.hpp"
#include "agraded/standard_pairs.hpp"

namespace agraded {

/// An integer linear map A: Z^n -> Z^d, stored by its n columns (the images
/// of the unit vectors).  The grading of the polynomial ring assigns x^a the
/// degree A(a).
class GradingMap {
 public:
  GradingMap(int d, int n, std::vector<std::vector<long long>> columns)
      : d_(d), n_(n), cols_(std::move(columns)) {
    if (d < 1) throw input_error("grading target rank must be positive");
    if (n < 0 || n > 64) throw input_error("variable count out of range");
    if (static_cast<int>(cols_.size()) != n)
      throw input_error("column count does not match n");
    for (const auto& c : cols_)
      if (static_cast<int>(c.size()) != d)
        throw input_error("column length does not match d");
  }

  int target_rank() const { return d_; }
  int var_count() const { return n_; }
  const std::vector<long long>& column(int j) const {
    return cols_[static_cast<size_t>(j)];
  }
  const std::vector<std::vector<long long>>& columns() const { return cols_; }

  std::vector<long long> apply(const ExponentVector& a) const {
    if (a.size() != n_) throw input_error("exponent vector length does not match map");
    std::vector<long long> q(static_cast<size_t>(d_), 0);
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < d_; ++k)
        q[static_cast<size_t>(k)] = checked_addll(
            q[static_cast<size_t>(k)],
            checked_mulll(cols_[static_cast<size_t>(j)][static_cast<size_t>(k)], a[j]));
    return q;
  }

  friend bool operator==(const GradingMap& a, const GradingMap& b) {
    return a.d_ == b.d_ && a.n_ == b.n_ && a.cols_ == b.cols_;
  }

 private:
  int d_, n_;
  std::vector<std::vector<long long>> cols_;
};

/// A rational functional strictly positive on every column: witnesses that
/// (ker A) meets the nonnegative orthant only in 0 and bounds fiber search.
struct PointednessCertificate {
  intlin::RVec functional;  // length d
};

/// A nonzero nonnegative integer kernel vector: witnesses non-pointedness.
struct NonnegKernelWitness {
  intlin::IVec vector;  // length n
};

using Pointedness = std::variant<PointednessCertificate, NonnegKernelWitness>;

/// Decide pointedness by exact Fourier-Motzkin elimination on the system
/// c . A_j >= 1.  Feasible: the solution is the certificate.  Infeasible:
/// the Farkas multipliers scale to a nonnegative kernel vector.
inline Pointedness is_pointed(const GradingMap& map) {
  const int d = map.target_rank(), n = map.var_count();
  intlin::RMat lhs;
  intlin::RVec rhs;
  for (int j = 0; j < n; ++j) {
    intlin::RVec row(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k)
      row[static_cast<size_t>(k)] = intlin::rat_of(map.column(j)[static_cast<size_t>(k)]);
    lhs.push_back(std::move(row));
    rhs.emplace_back(1);
  }
  intlin::FmResult fm = intlin::fourier_motzkin(lhs, rhs);
  if (fm.feasible) {
    if (fm.point.empty()) fm.point.assign(static_cast<size_t>(d), intlin::Rat(0));
    return PointednessCertificate{std::move(fm.point)};
  }
  intlin::IVec witness = intlin::primitive_integer(fm.farkas);
  return NonnegKernelWitness{std::move(witness)};
}

inline bool pointed(const GradingMap& map) {
  return std::holds_alternative<PointednessCertificate>(is_pointed(map));
}

namespace detail {

/// Prepared fiber search: integer-scaled certificate weights, variables in
/// decreasing weight order for pruning, plus coordinate bounds when every
/// column is nonnegative.
class FiberSearch {
 public:
  explicit FiberSearch(const GradingMap& map) : map_(map) {
    auto pt = is_pointed(map);
    if (std::holds_alternative<NonnegKernelWitness>(pt))
      throw input_error("grading map is not pointed; fibers may be infinite");
    intlin::RVec c = std::get<PointednessCertificate>(pt).functional;
    intlin::IVec ci = intlin::primitive_integer(c);
    cert_.assign(ci.size(), 0);
    for (size_t k = 0; k < ci.size(); ++k) {
      if (!ci[k].fits_slong_p()) throw std::overflow_error("certificate too large");
      cert_[k] = ci[k].get_si();
    }
    const int n = map.var_count();
    weights_.resize(static_cast<size_t>(n));
    nonneg_ = true;
    for (int j = 0; j < n; ++j) {
      long long w = 0;
      for (int k = 0; k < map.target_rank(); ++k)
        w = checked_addll(w, checked_mulll(cert_[static_cast<size_t>(k)],
                                           map.column(j)[static_cast<size_t>(k)]));
      weights_[static_cast<size_t>(j)] = w;
      for (long long e : map.column(j)) nonneg_ = nonneg_ && e >= 0;
    }
    perm_.resize(static_cast<size_t>(n));
    std::iota(perm_.begin(), perm_.end(), 0);
    std::sort(perm_.begin(), perm_.end(), [&](int a, int b) {
      long long wa = weights_[static_cast<size_t>(a)], wb = weights_[static_cast<size_t>(b)];
      return wa != wb ? wa > wb : a < b;
    });
  }

  const std::vector<long long>& certificate_weights() const { return weights_; }

  /// All a >= 0 with A(a) = q, in canonical order.
  std::vector<ExponentVector> enumerate(const std::vector<long long>& q) const {
    if (static_cast<int>(q.size()) != map_.target_rank())
      throw input_error("degree vector length does not match map");
    const int n = map_.var_count();
    const int d = map_.target_rank();
    std::vector<ExponentVector> out;
    std::vector<int> a(static_cast<size_t>(n), 0);
    std::vector<long long> rem = q;
    auto cdot = [&](const std::vector<long long>& v) {
      long long s = 0;
      for (int k = 0; k < d; ++k)
        s = checked_addll(s, checked_mulll(cert_[static_cast<size_t>(k)], v[static_cast<size_t>(k)]));
      return s;
    };
    auto rec = [&](auto&& self, int idx) -> void {
      long long budget = cdot(rem);
      if (budget < 0) return;
      if (nonneg_)
        for (long long r : rem)
          if (r < 0) return;
      if (idx == n) {
        bool zero = std::all_of(rem.begin(), rem.end(), [](long long r) { return r == 0; });
        if (zero) out.emplace_back(a);
        return;
      }
      const int j = perm_[static_cast<size_t>(idx)];
      const auto& col = map_.column(j);
      long long wj = weights_[static_cast<size_t>(j)];
      long long hi = wj > 0 ? budget / wj : 0;
      if (nonneg_)
        for (int k = 0; k < d; ++k)
          if (col[static_cast<size_t>(k)] > 0)
            hi = std::min(hi, rem[static_cast<size_t>(k)] / col[static_cast<size_t>(k)]);
      for (long long v = 0; v <= hi; ++v) {
        a[static_cast<size_t>(j)] = static_cast<int>(v);
        self(self, idx + 1);
        for (int k = 0; k < d; ++k) rem[static_cast<size_t>(k)] -= col[static_cast<size_t>(k)];
      }
      for (int k = 0; k < d; ++k)
        rem[static_cast<size_t>(k)] += (hi + 1) * col[static_cast<size_t>(k)];
      a[static_cast<size_t>(j)] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  GradingMap map_;
  std::vector<long long> cert_;     // integer certificate on degrees
  std::vector<long long> weights_;  // cert . column_j, strictly positive
  std::vector<int> perm_;
  bool nonneg_ = false;
};

}  // namespace detail

/// The fiber F_q = { a in Z_{>=0}^n : A(a) = q }.  Requires a pointed map.
inline std::vector<ExponentVector> fiber_enumerate(
    const GradingMap& map, const std::vector<long long>& degree) {
  return detail::FiberSearch(map).enumerate(degree);
}

/// Bounded A-gradedness certificate.  Sweeps every degree 0 <= q <= box and
/// requires exactly one standard monomial per nonempty fiber.  A pass
/// certifies the Hilbert condition on the box only, not for all degrees.
struct AgradedReport {
  std::vector<long long> box;
  long long degrees_checked = 0;
  struct Violation {
    std::vector<long long> degree;
    long long standard_count;
  };
  std::vector<Violation> violations;
  bool pass = false;
};

inline AgradedReport verify_agraded(const MonomialIdeal& ideal,
                                    const GradingMap& map,
                                    const std::vector<long long>& box) {
  if (ideal.var_count() != map.var_count())
    throw input_error("ideal and grading map have different variable counts");
  if (static_cast<int>(box.size()) != map.target_rank())
    throw input_error("degree box length does not match map");
  for (long long b : box)
    if (b < 0) throw input_error("degree box must be nonnegative");
  detail::FiberSearch search(map);
  AgradedReport report;
  report.box = box;
  std::vector<long long> q(box.size(), 0);
  while (true) {
    ++report.degrees_checked;
    auto fiber = search.enumerate(q);
    if (!fiber.empty()) {
      long long standard = 0;
      for (const auto& a : fiber)
        if (!ideal.contains(a)) ++standard;
      if (standard != 1) report.violations.push_back({q, standard});
    }
    size_t i = 0;
    while (i < q.size() && q[i] == box[i]) {
      q[i] = 0;
      ++i;
    }
    if (i == q.size()) break;
    ++q[i];
  }
  report.pass = report.violations.empty();
  return report;
}

/// A finitely generated abelian group in invariant-factor form.
struct FiniteAbelianGroup {
  std::vector<intlin::Int> invariant_factors;  // each >= 2, each dividing the next
  int rank = 0;                                // free part

  bool is_finite() const { return rank == 0; }
  intlin::Int order() const {
    if (!is_finite()) throw input_error("group is infinite");
    intlin::Int o = 1;
    for (const auto& f : invariant_factors) o *= f;
    return o;
  }
};

/// The quotient A(Z^n) / A(Z^l) together with its canonical residue map.
/// Computed by expressing the l-columns in a lattice basis of the full
/// column lattice and taking the Smith normal form of that coordinate
/// matrix.
class QuotientGroup {
 public:
  QuotientGroup(const GradingMap& map, Face face) {
    const int d = map.target_rank(), n = map.var_count();
    intlin::IMat rows;
    for (int j = 0; j < n; ++j) {
      intlin::IVec r(static_cast<size_t>(d));
      for (int k = 0; k < d; ++k)
        r[static_cast<size_t>(k)] = intlin::int_of(map.column(j)[static_cast<size_t>(k)]);
      rows.push_back(std::move(r));
    }
    basis_ = intlin::lattice_basis(rows);
    const size_t r1 = basis_.size();
    intlin::IMat coord_cols;  // r1 x |face|
    for (int j : face.members()) {
      intlin::IVec target(static_cast<size_t>(d));
      for (int k = 0; k < d; ++k)
        target[static_cast<size_t>(k)] = intlin::int_of(map.column(j)[static_cast<size_t>(k)]);
      auto x = intlin::solve_integral(intlin::transpose(basis_), target);
      if (!x) throw input_error("column outside its own lattice");  // unreachable
      coord_cols.push_back(std::move(*x));
    }
    intlin::IMat m(r1, intlin::IVec(coord_cols.size(), 0));
    for (size_t j = 0; j < coord_cols.size(); ++j)
      for (size_t i = 0; i < r1; ++i) m[i][j] = coord_cols[j][i];
    if (r1 == 0) {
      nnz_ = 0;
    } else {
      auto s = intlin::snf(m);
      u_ = std::move(s.u);
      diag_.assign(r1, 0);
      for (size_t i = 0; i < r1 && i < coord_cols.size(); ++i) diag_[i] = s.d[i][i];
      nnz_ = 0;
      while (nnz_ < diag_.size() && diag_[nnz_] != 0) ++nnz_;
    }
    group_.rank = static_cast<int>(r1 - nnz_);
    for (size_t i = 0; i < nnz_; ++i)
      if (diag_[i] >= 2) group_.invariant_factors.push_back(diag_[i]);
  }

  const FiniteAbelianGroup& group() const { return group_; }

  /// Canonical residue of a degree vector: torsion coordinates reduced
  /// modulo their invariant factors, free coordinates as-is.  Degrees
  /// outside A(Z^n) are rejected.
  intlin::IVec residue(const std::vector<long long>& degree) const {
    intlin::IVec target(degree.size());
    for (size_t k = 0; k < degree.size(); ++k) target[k] = intlin::int_of(degree[k]);
    auto x = intlin::solve_integral(intlin::transpose(basis_), target);
    if (!x) throw input_error("degree vector is outside the image lattice A(Z^n)");
    const size_t r1 = basis_.size();
    intlin::IVec y(r1, 0);
    for (size_t i = 0; i < r1; ++i) {
      if (u_.empty()) {
        y[i] = (*x)[i];
      } else {
        for (size_t j = 0; j < r1; ++j) y[i] += u_[i][j] * (*x)[j];
      }
    }
    intlin::IVec out;
    for (size_t i = 0; i < nnz_; ++i) {
      if (diag_[i] >= 2) {
        intlin::Int m;
        mpz_fdiv_r(m.get_mpz_t(), y[i].get_mpz_t(), diag_[i].get_mpz_t());
        out.push_back(m);
      }
      // factor 1 coordinates are always trivial and dropped
    }
    for (size_t i = nnz_; i < r1; ++i) out.push_back(y[i]);
    return out;
  }

 private:
  intlin::IMat basis_;  // HNF rows spanning A(Z^n)
  intlin::IMat u_;
  intlin::IVec diag_;
  size_t nnz_ = 0;
  FiniteAbelianGroup group_;
};

inline QuotientGroup quotient_group(const GradingMap& map, Face face) {
  return QuotientGroup(map, face);
}

/// A simplicial cone in Z^d: generating rays plus integer facet normals
/// (each ray evaluates nonnegatively on each normal).
struct Cone {
  std::vector<intlin::IVec> rays;
  std::vector<intlin::IVec> facet_normals;
};

struct TriangulationReport {
  std::vector<Face> cell_faces;  // faces l with (0, l) in B(T)
  std::vector<Cone> cells;
  std::vector<std::string> violations;
  bool valid = false;
};

namespace detail {

// feasibility of { h . x >= 0 for h in nonstrict, s . x > 0 }; homogeneous,
// so the strict row may be rescaled to s . x >= 1
inline bool cone_strictly_feasible(const intlin::RMat& nonstrict,
                                   const intlin::RVec& strict) {
  intlin::RMat lhs = nonstrict;
  intlin::RVec rhs(nonstrict.size(), intlin::Rat(0));
  lhs.push_back(strict);
  rhs.emplace_back(1);
  return intlin::fourier_motzkin(lhs, rhs).feasible;
}

}  // namespace detail

/// The cones A(R_{>=0}^l) for the faces l with (0, l) in B(T), with exact
/// validity checks: every cell simplicial and full-dimensional in the span
/// of the columns, pairwise intersections equal to common faces, and every
/// cell facet either shared by exactly two cells or supporting the whole
/// column cone.  For an A-graded ideal this is a triangulation of
/// A(R_{>=0}^n); violations signal non-A-graded input.
inline TriangulationReport triangulation(const StandardPairBasis& basis,
                                         const GradingMap& map) {
  if (basis.ideal().var_count() != map.var_count())
    throw input_error("ideal and grading map have different variable counts");
  const int d = map.target_rank(), n = map.var_count();
  TriangulationReport report;
  for (const auto& p : basis.pairs())
    if (p.root.is_zero()) report.cell_faces.push_back(p.face);
  std::sort(report.cell_faces.begin(), report.cell_faces.end());

  // rational coordinates of all columns in a basis of their span
  intlin::RMat all_cols(static_cast<size_t>(n), intlin::RVec(static_cast<size_t>(d)));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < d; ++k)
      all_cols[static_cast<size_t>(j)][static_cast<size_t>(k)] =
          intlin::rat_of(map.column(j)[static_cast<size_t>(k)]);
  std::vector<int> basis_cols;
  {
    intlin::RMat chosen;
    for (int j = 0; j < n; ++j) {
      chosen.push_back(all_cols[static_cast<size_t>(j)]);
      if (intlin::rank_rational(chosen) == static_cast<int>(chosen.size()))
        basis_cols.push_back(j);
      else
        chosen.pop_back();
    }
  }
  const int span_dim = static_cast<int>(basis_cols.size());
  intlin::RMat span_basis(static_cast<size_t>(d), intlin::RVec(static_cast<size_t>(span_dim)));
  for (int c = 0; c < span_dim; ++c)
    for (int k = 0; k < d; ++k)
      span_basis[static_cast<size_t>(k)][static_cast<size_t>(c)] =
          all_cols[static_cast<size_t>(basis_cols[static_cast<size_t>(c)])][static_cast<size_t>(k)];
  auto span_coords = [&](int j) -> intlin::RVec {
    intlin::RVec target(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k)
      target[static_cast<size_t>(k)] = intlin::rat_of(map.column(j)[static_cast<size_t>(k)]);
    auto x = intlin::solve_rational(span_basis, target);
    return *x;  // columns lie in their own span
  };
  std::vector<intlin::RVec> coords(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) coords[static_cast<size_t>(j)] = span_coords(j);

  struct Cell {
    Face face;
    std::vector<int> ray_vars;
    intlin::RMat normals;  // rows, in span coordinates
    bool ok = false;
  };
  std::vector<Cell> cells;
  for (const Face& f : report.cell_faces) {
    Cell cell;
    cell.face = f;
    cell.ray_vars = f.members();
    intlin::RMat rays;
    for (int j : cell.ray_vars) rays.push_back(coords[static_cast<size_t>(j)]);
    if (intlin::rank_rational(rays) != static_cast<int>(rays.size())) {
      report.violations.push_back("cell is not simplicial (dependent rays)");
      cells.push_back(std::move(cell));
      continue;
    }
    if (static_cast<int>(rays.size()) != span_dim) {
      report.violations.push_back("cell is not full-dimensional in the column span");
      cells.push_back(std::move(cell));
      continue;
    }
    // facet normals: rows of the inverse of the ray matrix (rays as columns)
    cell.normals.assign(static_cast<size_t>(span_dim), intlin::RVec(static_cast<size_t>(span_dim)));
    intlin::RMat ray_matrix(static_cast<size_t>(span_dim), intlin::RVec(static_cast<size_t>(span_dim)));
    for (int c = 0; c < span_dim; ++c)
      for (int r = 0; r < span_dim; ++r)
        ray_matrix[static_cast<size_t>(r)][static_cast<size_t>(c)] =
            rays[static_cast<size_t>(c)][static_cast<size_t>(r)];
    for (int i = 0; i < span_dim; ++i) {
      intlin::RVec e(static_cast<size_t>(span_dim), intlin::Rat(0));
      e[static_cast<size_t>(i)] = 1;
      // h . ray_j = delta_ij  <=>  ray_matrix^T h = e_i
      intlin::RMat mt(static_cast<size_t>(span_dim), intlin::RVec(static_cast<size_t>(span_dim)));
      for (int r = 0; r < span_dim; ++r)
        for (int c = 0; c < span_dim; ++c)
          mt[static_cast<size_t>(r)][static_cast<size_t>(c)] =
              ray_matrix[static_cast<size_t>(c)][static_cast<size_t>(r)];
      cell.normals[static_cast<size_t>(i)] = *intlin::solve_rational(mt, e);
    }
    cell.ok = true;
    cells.push_back(std::move(cell));
  }

  auto in_cell = [&](const Cell& cell, const intlin::RVec& x) {
    for (const auto& h : cell.normals) {
      intlin::Rat s = 0;
      for (size_t k = 0; k < h.size(); ++k) s += h[k] * x[k];
      if (s < 0) return false;
    }
    return true;
  };

  // pairwise intersections must be common faces
  for (size_t ci = 0; ci < cells.size(); ++ci) {
    for (size_t cj = ci + 1; cj < cells.size(); ++cj) {
      const Cell &a = cells[ci], &b = cells[cj];
      if (!a.ok || !b.ok) continue;
      auto check_side = [&](const Cell& s, const Cell& t) {
        for (size_t i = 0; i < s.ray_vars.size(); ++i) {
          if (in_cell(t, coords[static_cast<size_t>(s.ray_vars[i])])) continue;
          intlin::RMat nonstrict = s.normals;
          for (const auto& h : t.normals) nonstrict.push_back(h);
          if (detail::cone_strictly_feasible(nonstrict, s.normals[i]))
            return false;
        }
        return true;
      };
      if (!check_side(a, b) || !check_side(b, a))
        report.violations.push_back("two cells intersect beyond a common face");
    }
  }

  // facet sharing: internal facets in exactly two cells, boundary facets
  // supported by every column
  for (const Cell& cell : cells) {
    if (!cell.ok) continue;
    for (size_t i = 0; i < cell.ray_vars.size(); ++i) {
      int count = 0;
      for (const Cell& other : cells) {
        if (!other.ok) continue;
        bool contains_facet = true;
        for (size_t j = 0; j < cell.ray_vars.size() && contains_facet; ++j) {
          if (j == i) continue;
          contains_facet = in_cell(other, coords[static_cast<size_t>(cell.ray_vars[j])]);
        }
        if (contains_facet) ++count;
      }
      if (count >= 3) {
        report.violations.push_back("a facet is contained in more than two cells");
      } else if (count == 1) {
        const auto& h = cell.normals[i];
        for (int j = 0; j < n; ++j) {
          intlin::Rat s = 0;
          for (size_t k = 0; k < h.size(); ++k) s += h[k] * coords[static_cast<size_t>(j)][k];
          if (s < 0) {
            report.violations.push_back(
                "an unshared facet does not support the column cone");
            break;
          }
        }
      }
    }
  }

  // export cells with integer rays and lifted integer facet normals
  for (const Cell& cell : cells) {
    Cone cone;
    for (int j : cell.ray_vars) {
      intlin::IVec ray(static_cast<size_t>(d));
      for (int k = 0; k < d; ++k)
        ray[static_cast<size_t>(k)] = intlin::int_of(map.column(j)[static_cast<size_t>(k)]);
      cone.rays.push_back(std::move(ray));
    }
    if (cell.ok) {
      for (const auto& h : cell.normals) {
        // lift from span coordinates: solve span_basis^T H = h
        intlin::RMat bt(static_cast<size_t>(span_dim), intlin::RVec(static_cast<size_t>(d)));
        for (int r = 0; r < span_dim; ++r)
          for (int k = 0; k < d; ++k)
            bt[static_cast<size_t>(r)][static_cast<size_t>(k)] =
                span_basis[static_cast<size_t>(k)][static_cast<size_t>(r)];
        auto lifted = intlin::solve_rational(bt, h);
        cone.facet_normals.push_back(intlin::primitive_integer(*lifted));
      }
    }
    report.cells.push_back(std::move(cone));
  }
  report.valid = report.violations.empty();
  return report;
}

/// One candidate truncated standard-monomial set: a choice of exactly one
/// standard monomial per nonempty fiber over the swept degree box,
/// downward closed, plus the truncated monomial ideal generated by the
/// rejected fiber members.  A-gradedness is certified up to the bound only.
struct AgradedCandidate {
  std::vector<ExponentVector> standard;
  MonomialIdeal truncated_ideal;
};

inline std::vector<AgradedCandidate> enumerate_agraded(
    const GradingMap& map, const std::vector<long long>& degree_bound) {
  if (static_cast<int>(degree_bound.size()) != map.target_rank())
    throw input_error("degree bound length does not match map");
  detail::FiberSearch search(map);
  const auto& w = search.certificate_weights();

  struct FiberEntry {
    std::vector<long long> degree;
    std::vector<ExponentVector> members;
  };
  std::vector<FiberEntry> fibers;
  std::vector<long long> q(degree_bound.size(), 0);
  while (true) {
    auto members = search.enumerate(q);
    if (!members.empty()) fibers.push_back({q, std::move(members)});
    size_t i = 0;
    while (i < q.size() && q[i] == degree_bound[i]) {
      q[i] = 0;
      ++i;
    }
    if (i == q.size()) break;
    ++q[i];
  }
  // process degrees in increasing certificate order so that every proper
  // divisor of a fiber member is decided first
  auto cert_value = [&](const FiberEntry& f) {
    long long s = 0;
    if (!f.members.empty()) {
      const auto& a = f.members.front();
      for (int j = 0; j < a.size(); ++j)
        s = checked_addll(s, checked_mulll(w[static_cast<size_t>(j)], a[j]));
    }
    return s;
  };
  std::stable_sort(fibers.begin(), fibers.end(),
                   [&](const FiberEntry& a, const FiberEntry& b) {
                     long long ca = cert_value(a), cb = cert_value(b);
                     return ca != cb ? ca < cb : a.degree < b.degree;
                   });

  std::map<std::vector<long long>, ExponentVector> chosen;
  std::vector<AgradedCandidate> out;
  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == fibers.size()) {
      std::vector<ExponentVector> standard;
      std::vector<ExponentVector> rejected;
      for (const auto& f : fibers) {
        const auto& pick = chosen.at(f.degree);
        standard.push_back(pick);
        for (const auto& m : f.members)
          if (m != pick) rejected.push_back(m);
      }
      std::sort(standard.begin(), standard.end());
      out.push_back({std::move(standard),
                     MonomialIdeal::minimalize(map.var_count(), std::move(rejected))});
      return;
    }
    const auto& f = fibers[idx];
    for (const auto& candidate : f.members) {
      bool consistent = true;
      for (int j = 0; j < candidate.size() && consistent; ++j) {
        if (candidate[j] == 0) continue;
        ExponentVector below = candidate.with_coord(j, candidate[j] - 1);
        auto deg = map.apply(below);
        auto it = chosen.find(deg);
        // divisors whose degree left the swept box cannot be certified
        consistent = it != chosen.end() && it->second == below;
      }
      if (!consistent) continue;
      chosen.emplace(f.degree, candidate);
      self(self, idx + 1);
      chosen.erase(f.degree);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace agraded
