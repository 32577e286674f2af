#pragma once

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <vector>

#include "agraded/binomial.hpp"
#include "agraded/grading.hpp"
#include "agraded/intlin.hpp"

namespace agraded {

// ---------------------------------------------------------------------------
// Grobner machinery for ideals generated by monomials and pure-difference
// binomials.  S-pairs and reductions of such elements stay in that class, so
// the whole computation runs on exponent vectors.  The toric ideal J_A is
// obtained from a kernel lattice basis of A by saturating the lattice-basis
// ideal at each variable in turn.
// ---------------------------------------------------------------------------

/// Weight order with lexicographic tie-break along a variable permutation.
/// The zero monomial-weight vector is allowed; the permutation alone then
/// gives plain lex.
struct TermOrder {
  std::vector<long long> weights;
  std::vector<int> tiebreak;  // permutation of 0..n-1, most significant first

  TermOrder(std::vector<long long> w, std::vector<int> perm)
      : weights(std::move(w)), tiebreak(std::move(perm)) {
    for (long long x : weights)
      if (x < 0) throw input_error("term-order weights must be nonnegative");
    std::vector<int> sorted = tiebreak;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != static_cast<int>(i))
        throw input_error("tie-break must be a permutation of the variables");
    if (weights.size() != tiebreak.size())
      throw input_error("weight and tie-break lengths differ");
  }

  static TermOrder grlex(int n) {
    std::vector<long long> w(static_cast<size_t>(n), 1);
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    return TermOrder(std::move(w), std::move(perm));
  }

  int compare(const ExponentVector& u, const ExponentVector& v) const {
    long long wu = 0, wv = 0;
    for (size_t i = 0; i < weights.size(); ++i) {
      wu = checked_addll(wu, checked_mulll(weights[i], u[static_cast<int>(i)]));
      wv = checked_addll(wv, checked_mulll(weights[i], v[static_cast<int>(i)]));
    }
    if (wu != wv) return wu < wv ? -1 : 1;
    for (int i : tiebreak) {
      if (u[i] != v[i]) return u[i] < v[i] ? -1 : 1;
    }
    return 0;
  }
};

namespace detail {

/// Positive-weight order with reverse lexicographic tie-break putting one
/// chosen variable last.  For ideals homogeneous under the weight, a leading
/// term divisible by that variable forces the whole element to be, which is
/// what variable saturation needs.
struct WeightRevlexOrder {
  std::vector<long long> weights;  // strictly positive
  int last;

  int compare(const ExponentVector& u, const ExponentVector& v) const {
    long long wu = 0, wv = 0;
    for (size_t i = 0; i < weights.size(); ++i) {
      wu = checked_addll(wu, checked_mulll(weights[i], u[static_cast<int>(i)]));
      wv = checked_addll(wv, checked_mulll(weights[i], v[static_cast<int>(i)]));
    }
    if (wu != wv) return wu < wv ? -1 : 1;
    const int n = u.size();
    if (u[last] != v[last]) return u[last] > v[last] ? -1 : 1;
    for (int i = n - 1; i >= 0; --i) {
      if (i == last) continue;
      if (u[i] != v[i]) return u[i] > v[i] ? -1 : 1;
    }
    return 0;
  }
};

}  // namespace detail

/// A basis element: the monomial x^lead, or the binomial x^lead - x^tail
/// with lead strictly larger in the basis term order.
struct GroebnerElement {
  ExponentVector lead;
  std::optional<ExponentVector> tail;

  bool is_monomial() const { return !tail.has_value(); }

  friend bool operator==(const GroebnerElement& x, const GroebnerElement& y) {
    return x.lead == y.lead && x.tail == y.tail;
  }
  friend bool operator<(const GroebnerElement& x, const GroebnerElement& y) {
    if (x.lead != y.lead) return x.lead < y.lead;
    if (x.tail.has_value() != y.tail.has_value()) return !x.tail.has_value();
    return x.tail < y.tail;
  }
};

namespace detail {

inline ExponentVector lcm_exponents(const ExponentVector& a,
                                    const ExponentVector& b) {
  std::vector<int> c(static_cast<size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) c[static_cast<size_t>(i)] = std::max(a[i], b[i]);
  return ExponentVector(std::move(c));
}

inline ExponentVector subtract_add(const ExponentVector& a,
                                   const ExponentVector& sub,
                                   const ExponentVector& add) {
  std::vector<int> c(static_cast<size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i)
    c[static_cast<size_t>(i)] = checked_add(a[i] - sub[i], add[i]);
  return ExponentVector(std::move(c));
}

/// Build an element from two monomials; nullopt when they cancel.
template <typename Order>
std::optional<GroebnerElement> make_element(ExponentVector u, ExponentVector v,
                                            const Order& ord) {
  int c = ord.compare(u, v);
  if (c == 0) return std::nullopt;
  if (c < 0) std::swap(u, v);
  return GroebnerElement{std::move(u), std::move(v)};
}

/// Full normal form: reduce the leading monomial to irreducibility, then the
/// tail.  Returns nullopt when the element reduces to zero.
template <typename Order>
std::optional<GroebnerElement> reduce_full(GroebnerElement e,
                                           const std::vector<GroebnerElement>& basis,
                                           const Order& ord) {
  while (true) {
    bool reduced = false;
    for (const auto& b : basis) {
      if (!b.lead.divides(e.lead)) continue;
      if (b.is_monomial()) {
        if (e.is_monomial()) return std::nullopt;
        e = GroebnerElement{*e.tail, std::nullopt};
      } else {
        ExponentVector next = subtract_add(e.lead, b.lead, *b.tail);
        if (e.is_monomial()) {
          e = GroebnerElement{std::move(next), std::nullopt};
        } else {
          auto rebuilt = make_element(std::move(next), *e.tail, ord);
          if (!rebuilt) return std::nullopt;
          e = std::move(*rebuilt);
        }
      }
      reduced = true;
      break;
    }
    if (reduced) continue;
    if (!e.is_monomial()) {
      for (const auto& b : basis) {
        if (!b.lead.divides(*e.tail)) continue;
        if (b.is_monomial()) {
          e = GroebnerElement{e.lead, std::nullopt};
        } else {
          // the tail strictly decreases, so the orientation is preserved
          e.tail = subtract_add(*e.tail, b.lead, *b.tail);
        }
        reduced = true;
        break;
      }
    }
    if (!reduced) return e;
  }
}

/// Buchberger completion followed by interreduction; the result is the
/// reduced basis, sorted by leading term.
template <typename Order>
std::vector<GroebnerElement> buchberger(std::vector<GroebnerElement> gens,
                                        const Order& ord) {
  std::vector<GroebnerElement> basis;
  std::deque<std::pair<size_t, size_t>> queue;
  auto append = [&](GroebnerElement e) {
    for (size_t i = 0; i < basis.size(); ++i) queue.emplace_back(i, basis.size());
    basis.push_back(std::move(e));
  };
  for (auto& g : gens) {
    // inputs may be oriented for a different order
    std::optional<GroebnerElement> e;
    if (g.is_monomial())
      e = std::move(g);
    else
      e = make_element(std::move(g.lead), std::move(*g.tail), ord);
    if (!e) continue;
    auto nf = reduce_full(std::move(*e), basis, ord);
    if (nf) append(std::move(*nf));
  }
  while (!queue.empty()) {
    auto [i, j] = queue.front();
    queue.pop_front();
    const GroebnerElement &f = basis[i], &g = basis[j];
    if (f.is_monomial() && g.is_monomial()) continue;
    {  // coprime leading terms: the S-pair reduces to zero
      bool coprime = true;
      for (int k = 0; k < f.lead.size() && coprime; ++k)
        if (f.lead[k] > 0 && g.lead[k] > 0) coprime = false;
      if (coprime) continue;
    }
    ExponentVector l = lcm_exponents(f.lead, g.lead);
    std::optional<GroebnerElement> s;
    if (f.is_monomial()) {
      s = GroebnerElement{subtract_add(l, g.lead, *g.tail), std::nullopt};
    } else if (g.is_monomial()) {
      s = GroebnerElement{subtract_add(l, f.lead, *f.tail), std::nullopt};
    } else {
      s = make_element(subtract_add(l, f.lead, *f.tail),
                       subtract_add(l, g.lead, *g.tail), ord);
    }
    if (!s) continue;
    auto nf = reduce_full(std::move(*s), basis, ord);
    if (nf) append(std::move(*nf));
  }
  // minimal leading terms
  std::sort(basis.begin(), basis.end(), [&](const auto& x, const auto& y) {
    return ord.compare(x.lead, y.lead) < 0;
  });
  std::vector<GroebnerElement> minimal;
  for (auto& e : basis) {
    bool dominated = false;
    for (const auto& m : minimal)
      if (m.lead.divides(e.lead)) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(std::move(e));
  }
  // interreduce tails
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < minimal.size(); ++i) {
      std::vector<GroebnerElement> others;
      for (size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      auto nf = reduce_full(minimal[i], others, ord);
      if (nf && !(*nf == minimal[i])) {
        minimal[i] = std::move(*nf);
        changed = true;
      }
    }
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

}  // namespace detail

/// A reduced Grobner basis together with its term order.
class GroebnerBasis {
 public:
  GroebnerBasis(int n, std::vector<GroebnerElement> elements, TermOrder order)
      : n_(n), elements_(std::move(elements)), order_(std::move(order)) {}

  int var_count() const { return n_; }
  const std::vector<GroebnerElement>& elements() const { return elements_; }
  const TermOrder& order() const { return order_; }

 private:
  int n_;
  std::vector<GroebnerElement> elements_;
  TermOrder order_;
};

/// Reduced Grobner basis of an ideal given by monomial and pure-difference
/// binomial generators, under the given order.
inline GroebnerBasis groebner_basis(const BinomialIdeal& ideal,
                                    const TermOrder& order) {
  if (static_cast<int>(order.weights.size()) != ideal.n)
    throw input_error("term order size does not match ideal");
  std::vector<GroebnerElement> gens;
  for (const auto& m : ideal.monomial_gens)
    gens.push_back(GroebnerElement{m, std::nullopt});
  for (const auto& b : ideal.binomial_gens) {
    auto e = detail::make_element(b.a, b.b, order);
    if (e) gens.push_back(std::move(*e));
  }
  return GroebnerBasis(ideal.n, detail::buchberger(std::move(gens), order), order);
}

/// Confluent remainder of a monomial or binomial modulo a reduced basis;
/// nullopt means the element lies in the ideal.
inline std::optional<GroebnerElement> normal_form(const GroebnerBasis& basis,
                                                  GroebnerElement element) {
  return detail::reduce_full(std::move(element), basis.elements(), basis.order());
}

inline bool in_ideal(const GroebnerBasis& basis, const ExponentVector& monomial) {
  return !normal_form(basis, GroebnerElement{monomial, std::nullopt}).has_value();
}

inline bool in_ideal(const GroebnerBasis& basis, const PureBinomial& b) {
  auto e = detail::make_element(b.a, b.b, basis.order());
  if (!e) return true;
  return !normal_form(basis, std::move(*e)).has_value();
}

/// An integer basis of ker A, via the unimodular row transform of the
/// Hermite form of the stacked columns.  The kernel of an integer matrix is
/// saturated, so this basis spans it over Z.
inline std::vector<std::vector<long long>> kernel_basis(const GradingMap& map) {
  const int d = map.target_rank(), n = map.var_count();
  intlin::IMat m(static_cast<size_t>(n), intlin::IVec(static_cast<size_t>(d)));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < d; ++k)
      m[static_cast<size_t>(j)][static_cast<size_t>(k)] =
          intlin::int_of(map.column(j)[static_cast<size_t>(k)]);
  intlin::IMat u;
  intlin::IMat h = intlin::hnf(std::move(m), &u);
  std::vector<std::vector<long long>> out;
  for (size_t r = 0; r < h.size(); ++r) {
    bool zero = true;
    for (const auto& x : h[r])
      if (x != 0) zero = false;
    if (!zero) continue;
    std::vector<long long> v(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
      if (!u[r][static_cast<size_t>(j)].fits_slong_p())
        throw std::overflow_error("kernel basis entry too large");
      v[static_cast<size_t>(j)] = u[r][static_cast<size_t>(j)].get_si();
    }
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Reduced Grobner basis of the toric ideal J_A under the given order.
/// Starts from the lattice-basis ideal of ker A and saturates at each
/// variable in ascending order; each pass recomputes a reduced basis under
/// a positive-weight order that makes the variable cheapest, then divides
/// out its largest power.  The result is independent of the kernel basis.
inline GroebnerBasis toric_groebner(const GradingMap& map,
                                    const TermOrder& order) {
  const int n = map.var_count();
  if (static_cast<int>(order.weights.size()) != n)
    throw input_error("term order size does not match map");
  auto pt = is_pointed(map);
  if (std::holds_alternative<NonnegKernelWitness>(pt))
    throw input_error("grading map is not pointed; the toric ideal is not positively graded");
  // positive weight vector from the certificate, for the saturation orders
  intlin::IVec cert = intlin::primitive_integer(
      std::get<PointednessCertificate>(pt).functional);
  std::vector<long long> w(static_cast<size_t>(n), 1);
  for (int j = 0; j < n; ++j) {
    intlin::Int wj = 0;
    for (int k = 0; k < map.target_rank(); ++k)
      wj += cert[static_cast<size_t>(k)] *
            intlin::int_of(map.column(j)[static_cast<size_t>(k)]);
    if (!wj.fits_slong_p()) throw std::overflow_error("weight too large");
    w[static_cast<size_t>(j)] = wj.get_si();
  }

  std::vector<GroebnerElement> elems;
  {
    TermOrder seed = TermOrder::grlex(n);
    for (const auto& v : kernel_basis(map)) {
      std::vector<int> plus(static_cast<size_t>(n), 0), minus(static_cast<size_t>(n), 0);
      for (int j = 0; j < n; ++j) {
        long long x = v[static_cast<size_t>(j)];
        if (x > 0) plus[static_cast<size_t>(j)] = static_cast<int>(x);
        if (x < 0) minus[static_cast<size_t>(j)] = static_cast<int>(-x);
      }
      auto e = detail::make_element(ExponentVector(plus), ExponentVector(minus), seed);
      if (e) elems.push_back(std::move(*e));
    }
  }
  for (int i = 0; i < n; ++i) {
    detail::WeightRevlexOrder ord{w, i};
    elems = detail::buchberger(std::move(elems), ord);
    for (auto& e : elems) {
      int m = e.lead[i];
      if (e.tail) m = std::min(m, (*e.tail)[i]);
      if (m == 0) continue;
      e.lead = e.lead.with_coord(i, e.lead[i] - m);
      if (e.tail) e.tail = e.tail->with_coord(i, (*e.tail)[i] - m);
    }
  }
  return GroebnerBasis(n, detail::buchberger(std::move(elems), order), order);
}

/// The ideal of leading terms: a coherent A-graded monomial ideal when the
/// basis came from toric_groebner.
inline MonomialIdeal initial_ideal(const GroebnerBasis& basis,
                                   std::vector<std::string> names = {}) {
  std::vector<ExponentVector> leads;
  for (const auto& e : basis.elements()) leads.push_back(e.lead);
  return MonomialIdeal::minimalize(basis.var_count(), std::move(leads),
                                   std::move(names));
}

}  // namespace agraded
