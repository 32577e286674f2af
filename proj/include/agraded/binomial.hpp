#pragma once

#include <algorithm>
#include <vector>

#include "agraded/exponents.hpp"

namespace agraded {

/// A pure-difference binomial x^a - x^b with a != b, stored in the
/// canonical orientation a > b under graded lex.  Coefficients other than
/// +-1 are out of scope throughout.
struct PureBinomial {
  ExponentVector a, b;

  PureBinomial(ExponentVector u, ExponentVector v) {
    u.require_same_length(v);
    if (u == v) throw input_error("binomial sides must differ");
    if (grlex_less(u, v)) std::swap(u, v);
    a = std::move(u);
    b = std::move(v);
  }

  friend bool operator==(const PureBinomial& x, const PureBinomial& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const PureBinomial& x, const PureBinomial& y) {
    return !(x == y);
  }
  friend bool operator<(const PureBinomial& x, const PureBinomial& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }
};

/// An ideal generated by monomials and pure-difference binomials.
struct BinomialIdeal {
  int n = 0;
  std::vector<std::string> names;
  std::vector<ExponentVector> monomial_gens;
  std::vector<PureBinomial> binomial_gens;

  BinomialIdeal(int var_count, std::vector<ExponentVector> monomials,
                std::vector<PureBinomial> binomials,
                std::vector<std::string> variable_names = {})
      : n(var_count),
        names(std::move(variable_names)),
        monomial_gens(std::move(monomials)),
        binomial_gens(std::move(binomials)) {
    if (n < 0 || n > 64) throw input_error("variable count out of range");
    if (names.empty()) names = default_variable_names(n);
    if (static_cast<int>(names.size()) != n)
      throw input_error("variable name count does not match n");
    for (const auto& g : monomial_gens)
      if (g.size() != n) throw input_error("generator length does not match n");
    for (const auto& g : binomial_gens)
      if (g.a.size() != n) throw input_error("generator length does not match n");
    std::sort(monomial_gens.begin(), monomial_gens.end());
    monomial_gens.erase(std::unique(monomial_gens.begin(), monomial_gens.end()),
                        monomial_gens.end());
    std::sort(binomial_gens.begin(), binomial_gens.end());
    binomial_gens.erase(std::unique(binomial_gens.begin(), binomial_gens.end()),
                        binomial_gens.end());
  }

  static BinomialIdeal from_monomial_ideal(const MonomialIdeal& m) {
    return BinomialIdeal(m.var_count(), m.generators(), {}, m.variable_names());
  }

  bool is_monomial() const { return binomial_gens.empty(); }

  MonomialIdeal as_monomial_ideal() const {
    if (!is_monomial())
      throw input_error("ideal has binomial generators");
    return MonomialIdeal::minimalize(n, monomial_gens, names);
  }
};

}  // namespace agraded
