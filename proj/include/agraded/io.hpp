#pragma once

#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "agraded/binomial.hpp"
#include "agraded/exponents.hpp"
#include "agraded/grading.hpp"
#include "agraded/standard_pairs.hpp"

namespace agraded::io {

struct parse_error : input_error {
  parse_error(const std::string& what, int line)
      : input_error("line " + std::to_string(line) + ": " + what), line_no(line) {}
  int line_no;
};

/// A parsed ideal file: `vars:` header plus one generator per line.
/// Monomials are whitespace-separated `name` or `name^k` tokens; a binomial
/// is two monomials joined by `-`.  `#` starts a comment.
struct IdealFile {
  std::vector<std::string> vars;
  std::vector<ExponentVector> monomials;
  std::vector<PureBinomial> binomials;

  bool is_binomial() const { return !binomials.empty(); }
  int var_count() const { return static_cast<int>(vars.size()); }

  MonomialIdeal monomial_ideal() const {
    if (is_binomial())
      throw input_error("ideal file contains binomial generators");
    return MonomialIdeal::minimalize(var_count(), monomials, vars);
  }
  BinomialIdeal binomial_ideal() const {
    return BinomialIdeal(var_count(), monomials, binomials, vars);
  }
};

namespace detail {

inline std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

inline std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

inline ExponentVector parse_monomial(const std::vector<std::string>& toks,
                                     size_t begin, size_t end,
                                     const std::map<std::string, int>& index,
                                     int n, int line_no) {
  if (begin >= end) throw parse_error("empty generator", line_no);
  std::vector<int> c(static_cast<size_t>(n), 0);
  for (size_t t = begin; t < end; ++t) {
    const std::string& tok = toks[t];
    if (tok == "1") continue;  // the empty monomial
    std::string name = tok;
    long long exp = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      name = tok.substr(0, caret);
      std::string digits = tok.substr(caret + 1);
      try {
        size_t used = 0;
        exp = std::stoll(digits, &used);
        if (used != digits.size()) throw std::invalid_argument(digits);
      } catch (const std::exception&) {
        throw parse_error("bad exponent in token '" + tok + "'", line_no);
      }
      if (exp < 0) throw parse_error("negative exponent in token '" + tok + "'", line_no);
    }
    auto it = index.find(name);
    if (it == index.end())
      throw parse_error("unknown variable '" + name + "'", line_no);
    c[static_cast<size_t>(it->second)] =
        checked_add(c[static_cast<size_t>(it->second)], static_cast<int>(exp));
  }
  return ExponentVector(std::move(c));
}

}  // namespace detail

inline IdealFile parse_ideal(std::istream& in) {
  IdealFile out;
  std::map<std::string, int> index;
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = detail::strip_comment(line);
    auto toks = detail::tokens_of(body);
    if (toks.empty()) continue;
    if (!header_seen) {
      if (toks[0] != "vars:")
        throw parse_error("expected 'vars:' header", line_no);
      for (size_t i = 1; i < toks.size(); ++i) {
        if (!detail::valid_name(toks[i]))
          throw parse_error("bad variable name '" + toks[i] + "'", line_no);
        if (!index.emplace(toks[i], static_cast<int>(out.vars.size())).second)
          throw parse_error("duplicate variable '" + toks[i] + "'", line_no);
        out.vars.push_back(toks[i]);
      }
      if (out.vars.empty()) throw parse_error("no variables declared", line_no);
      header_seen = true;
      continue;
    }
    std::vector<size_t> dashes;
    for (size_t i = 0; i < toks.size(); ++i)
      if (toks[i] == "-") dashes.push_back(i);
    const int n = out.var_count();
    if (dashes.empty()) {
      out.monomials.push_back(
          detail::parse_monomial(toks, 0, toks.size(), index, n, line_no));
    } else if (dashes.size() == 1) {
      ExponentVector a =
          detail::parse_monomial(toks, 0, dashes[0], index, n, line_no);
      ExponentVector b = detail::parse_monomial(toks, dashes[0] + 1, toks.size(),
                                               index, n, line_no);
      if (a == b) throw parse_error("binomial sides are equal", line_no);
      out.binomials.emplace_back(std::move(a), std::move(b));
    } else {
      throw parse_error("more than one '-' in a generator", line_no);
    }
  }
  if (!header_seen) throw parse_error("missing 'vars:' header", line_no + 1);
  return out;
}

inline IdealFile parse_ideal(const std::string& text) {
  std::istringstream in(text);
  return parse_ideal(in);
}

/// Matrix file: first line `d n`, then d rows of n integers.
inline GradingMap parse_matrix(std::istream& in) {
  std::vector<long long> values;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = detail::strip_comment(line);
    std::istringstream row(body);
    std::string tok;
    while (row >> tok) {
      try {
        size_t used = 0;
        values.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw parse_error("bad integer '" + tok + "'", line_no);
      }
    }
  }
  if (values.size() < 2) throw parse_error("missing 'd n' header", 1);
  long long d = values[0], n = values[1];
  if (d < 1 || n < 0 || n > 64) throw parse_error("bad dimensions", 1);
  if (static_cast<long long>(values.size()) != 2 + d * n)
    throw parse_error("expected " + std::to_string(d * n) + " entries", 1);
  std::vector<std::vector<long long>> cols(static_cast<size_t>(n),
                                           std::vector<long long>(static_cast<size_t>(d)));
  for (long long r = 0; r < d; ++r)
    for (long long c = 0; c < n; ++c)
      cols[static_cast<size_t>(c)][static_cast<size_t>(r)] = values[static_cast<size_t>(2 + r * n + c)];
  return GradingMap(static_cast<int>(d), static_cast<int>(n), std::move(cols));
}

inline GradingMap parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

inline IdealFile load_ideal(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  return parse_ideal(in);
}

inline GradingMap load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  return parse_matrix(in);
}

// ---- printing, canonical and byte-stable ----------------------------------

inline std::string format_monomial(const ExponentVector& a,
                                   const std::vector<std::string>& names) {
  std::string out;
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += names[static_cast<size_t>(i)];
    if (a[i] > 1) out += '^' + std::to_string(a[i]);
  }
  return out.empty() ? "1" : out;
}

inline std::string format_face(Face f, const std::vector<std::string>& names) {
  std::string out = "<";
  bool first = true;
  for (int i : f.members()) {
    if (!first) out += ',';
    out += names[static_cast<size_t>(i)];
    first = false;
  }
  return out + ">";
}

inline std::string format_pair(const StandardPair& p,
                               const std::vector<std::string>& names) {
  return "(" + format_monomial(p.root, names) + ", " + format_face(p.face, names) + ")";
}

inline std::string format_binomial(const PureBinomial& b,
                                   const std::vector<std::string>& names) {
  return format_monomial(b.a, names) + " - " + format_monomial(b.b, names);
}

inline std::string print_ideal(const MonomialIdeal& ideal) {
  std::string out = "vars:";
  for (const auto& v : ideal.variable_names()) out += ' ' + v;
  out += '\n';
  for (const auto& g : ideal.generators())
    out += format_monomial(g, ideal.variable_names()) + '\n';
  return out;
}

inline std::string print_ideal(const BinomialIdeal& ideal) {
  std::string out = "vars:";
  for (const auto& v : ideal.names) out += ' ' + v;
  out += '\n';
  for (const auto& g : ideal.monomial_gens)
    out += format_monomial(g, ideal.names) + '\n';
  for (const auto& b : ideal.binomial_gens)
    out += format_binomial(b, ideal.names) + '\n';
  return out;
}

template <typename T>
std::string format_vector(const std::vector<T>& v) {
  std::ostringstream out;
  out << '(';
  for (size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

}  // namespace agraded::io
