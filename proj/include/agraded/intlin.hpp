#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "agraded/exponents.hpp"

// Exact integer / rational linear algebra on small dense matrices.
// Everything here is over mpz_class / mpq_class; no floating point.

namespace agraded::intlin {

using Int = mpz_class;
using Rat = mpq_class;
using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;  // row-major
using RVec = std::vector<Rat>;
using RMat = std::vector<RVec>;

// gmpxx has no long long overloads
inline Int int_of(long long x) {
  static_assert(sizeof(long) == sizeof(long long), "LP64 assumed");
  return Int(static_cast<long>(x));
}
inline Rat rat_of(long long x) { return Rat(static_cast<long>(x)); }

inline IMat identity(size_t m) {
  IMat u(m, IVec(m, 0));
  for (size_t i = 0; i < m; ++i) u[i][i] = 1;
  return u;
}

inline IMat transpose(const IMat& m) {
  if (m.empty()) return {};
  IMat t(m[0].size(), IVec(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
  return t;
}

inline void add_row_multiple(IMat& m, size_t dst, size_t src, const Int& c) {
  for (size_t j = 0; j < m[dst].size(); ++j) m[dst][j] += c * m[src][j];
}

/// Row Hermite normal form: returns H with U*M = H for unimodular U
/// (written to *u when given). H is in row echelon form with positive
/// pivots and entries above each pivot reduced into [0, pivot).
inline IMat hnf(IMat m, IMat* u = nullptr) {
  const size_t rows = m.size();
  const size_t cols = rows ? m[0].size() : 0;
  IMat uu = identity(rows);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    // clear the column below row r by gcd steps
    while (true) {
      size_t best = rows;
      for (size_t i = r; i < rows; ++i)
        if (m[i][c] != 0 && (best == rows || abs(m[i][c]) < abs(m[best][c])))
          best = i;
      if (best == rows) break;  // column is zero from r down
      std::swap(m[r], m[best]);
      std::swap(uu[r], uu[best]);
      bool cleared = true;
      for (size_t i = r + 1; i < rows; ++i) {
        if (m[i][c] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
        add_row_multiple(m, i, r, -q);
        add_row_multiple(uu, i, r, -q);
        if (m[i][c] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (m[r][c] == 0) continue;
    if (m[r][c] < 0) {
      for (auto& x : m[r]) x = -x;
      for (auto& x : uu[r]) x = -x;
    }
    for (size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
      add_row_multiple(m, i, r, -q);
      add_row_multiple(uu, i, r, -q);
    }
    ++r;
  }
  if (u) *u = std::move(uu);
  return m;
}

/// Canonical basis (HNF rows) of the lattice spanned by the rows of m.
inline IMat lattice_basis(const IMat& m) {
  IMat h = hnf(m);
  IMat out;
  for (const auto& row : h) {
    bool zero = true;
    for (const auto& x : row)
      if (x != 0) zero = false;
    if (!zero) out.push_back(row);
  }
  return out;
}

struct Snf {
  IMat d;  // diagonal, d[i][i] >= 0, each dividing the next
  IMat u;  // unimodular, u * m * v = d
  IMat v;
};

/// Smith normal form with both transforms.
inline Snf snf(IMat m) {
  const size_t rows = m.size();
  const size_t cols = rows ? m[0].size() : 0;
  IMat u = identity(rows), v = identity(cols);
  auto add_col = [&](IMat& mat, size_t dst, size_t src, const Int& c) {
    for (size_t i = 0; i < mat.size(); ++i) mat[i][dst] += c * mat[i][src];
  };
  auto swap_col = [&](IMat& mat, size_t a, size_t b) {
    for (size_t i = 0; i < mat.size(); ++i) std::swap(mat[i][a], mat[i][b]);
  };
  size_t t = 0;
  while (t < rows && t < cols) {
    // find a nonzero pivot in the trailing submatrix
    size_t pi = rows, pj = cols;
    for (size_t i = t; i < rows && pi == rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (m[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == rows) break;
    std::swap(m[t], m[pi]);
    std::swap(u[t], u[pi]);
    swap_col(m, t, pj);
    swap_col(v, t, pj);
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        Int q = m[i][t] / m[t][t];
        add_row_multiple(m, i, t, -q);
        add_row_multiple(u, i, t, -q);
        if (m[i][t] != 0) {  // remainder strictly smaller, swap in
          std::swap(m[t], m[i]);
          std::swap(u[t], u[i]);
          dirty = true;
        }
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        Int q = m[t][j] / m[t][t];
        add_col(m, j, t, -q);
        add_col(v, j, t, -q);
        if (m[t][j] != 0) {
          swap_col(m, t, j);
          swap_col(v, t, j);
          dirty = true;
        }
      }
    }
    // enforce divisibility of the remaining entries by m[t][t]
    bool restart = false;
    for (size_t i = t + 1; i < rows && !restart; ++i)
      for (size_t j = t + 1; j < cols && !restart; ++j)
        if (m[i][j] % m[t][t] != 0) {
          add_row_multiple(m, t, i, 1);
          add_row_multiple(u, t, i, 1);
          restart = true;
        }
    if (restart) continue;
    if (m[t][t] < 0) {
      for (auto& x : m[t]) x = -x;
      for (auto& x : u[t]) x = -x;
    }
    ++t;
  }
  return Snf{std::move(m), std::move(u), std::move(v)};
}

/// Solve A x = b over the integers; nullopt when no integral solution.
inline std::optional<IVec> solve_integral(const IMat& a, const IVec& b) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  if (rows == 0) return IVec{};
  Snf s = snf(a);
  IVec c(rows, 0);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < rows; ++j) c[i] += s.u[i][j] * b[j];
  IVec y(cols, 0);
  for (size_t i = 0; i < rows; ++i) {
    Int d = i < cols ? s.d[i][i] : Int(0);
    if (d == 0) {
      if (c[i] != 0) return std::nullopt;
    } else {
      if (c[i] % d != 0) return std::nullopt;
      y[i] = c[i] / d;
    }
  }
  IVec x(cols, 0);
  for (size_t i = 0; i < cols; ++i)
    for (size_t j = 0; j < cols; ++j) x[i] += s.v[i][j] * y[j];
  return x;
}

/// Does v lie in the lattice spanned by the rows of `basis`?
inline bool in_row_lattice(const IMat& basis, const IVec& v) {
  if (basis.empty()) {
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  }
  return solve_integral(transpose(basis), v).has_value();
}

inline int rank_rational(RMat m) {
  const size_t rows = m.size();
  const size_t cols = rows ? m[0].size() : 0;
  int rank = 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

/// Solve the square rational system M x = b by Gaussian elimination.
/// nullopt when M is singular or the system is inconsistent.
inline std::optional<RVec> solve_rational(RMat m, RVec b) {
  const size_t rows = m.size();
  const size_t cols = rows ? m[0].size() : 0;
  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    std::swap(b[r], b[p]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  RVec x(cols, Rat(0));  // free variables pinned to zero
  for (size_t i = 0; i < pivot_col.size(); ++i)
    x[pivot_col[i]] = b[i] / m[i][pivot_col[i]];
  return x;
}

/// Scale a rational vector to a primitive integer vector (same direction).
inline IVec primitive_integer(const RVec& v) {
  Int lcm = 1;
  for (const auto& q : v) {
    Int den = q.get_den();
    lcm = lcm / gcd(lcm, den) * den;
  }
  IVec w(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * Rat(lcm);
    w[i] = s.get_num();
  }
  Int g = 0;
  for (const auto& x : w) g = gcd(g, x);
  if (g > 1)
    for (auto& x : w) x /= g;
  return w;
}

struct FmResult {
  bool feasible = false;
  RVec point;   // a solution, when feasible
  RVec farkas;  // nonnegative multipliers with sum(l_i * row_i) = (0 >= rhs > 0)
};

/// Fourier-Motzkin feasibility of { x : lhs_i . x >= rhs_i }.
/// Tracks Farkas multipliers so infeasibility comes with a certificate.
inline FmResult fourier_motzkin(const RMat& lhs, const RVec& rhs) {
  const size_t m = lhs.size();
  const size_t d = m ? lhs[0].size() : 0;
  struct Row {
    RVec a;
    Rat b;
    RVec mult;
  };
  std::vector<Row> rows(m);
  for (size_t i = 0; i < m; ++i) {
    rows[i].a = lhs[i];
    rows[i].b = rhs[i];
    rows[i].mult.assign(m, Rat(0));
    rows[i].mult[i] = 1;
  }
  std::vector<std::vector<Row>> stage;  // rows before eliminating variable v
  for (size_t v = 0; v < d; ++v) {
    stage.push_back(rows);
    std::vector<Row> pos, neg, next;
    for (auto& r : rows) {
      if (r.a[v] > 0)
        pos.push_back(std::move(r));
      else if (r.a[v] < 0)
        neg.push_back(std::move(r));
      else
        next.push_back(std::move(r));
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        Row nr;
        Rat cp = -q.a[v], cq = p.a[v];  // both positive
        nr.a.resize(d);
        for (size_t j = 0; j < d; ++j) nr.a[j] = cp * p.a[j] + cq * q.a[j];
        nr.b = cp * p.b + cq * q.b;
        nr.mult.resize(m);
        for (size_t j = 0; j < m; ++j)
          nr.mult[j] = cp * p.mult[j] + cq * q.mult[j];
        next.push_back(std::move(nr));
      }
    // keep only the strongest row per normal direction
    std::map<RVec, size_t> best;
    std::vector<Row> dedup;
    for (auto& r : next) {
      auto it = best.find(r.a);
      if (it == best.end()) {
        best[r.a] = dedup.size();
        dedup.push_back(std::move(r));
      } else if (r.b > dedup[it->second].b) {
        dedup[it->second] = std::move(r);
      }
    }
    rows = std::move(dedup);
  }
  for (const auto& r : rows)
    if (r.b > 0) return FmResult{false, {}, r.mult};
  // feasible: back-substitute through the stages
  RVec x(d, Rat(0));
  for (size_t v = d; v-- > 0;) {
    bool has_lo = false, has_hi = false;
    Rat lo(0), hi(0);
    for (const auto& r : stage[v]) {
      if (r.a[v] == 0) continue;
      Rat rest = r.b;
      for (size_t j = v + 1; j < d; ++j) rest -= r.a[j] * x[j];
      Rat bound = rest / r.a[v];
      if (r.a[v] > 0) {
        if (!has_lo || bound > lo) lo = bound;
        has_lo = true;
      } else {
        if (!has_hi || bound < hi) hi = bound;
        has_hi = true;
      }
    }
    if (has_lo)
      x[v] = lo;
    else if (has_hi)
      x[v] = hi;
  }
  return FmResult{true, std::move(x), {}};
}

}  // namespace agraded::intlin
