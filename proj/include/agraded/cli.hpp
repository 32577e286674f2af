#pragma once

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "agraded/counterexample.hpp"
#include "agraded/decomposition.hpp"
#include "agraded/grading.hpp"
#include "agraded/io.hpp"
#include "agraded/saturated_binomial.hpp"
#include "agraded/standard_pairs.hpp"
#include "agraded/toric.hpp"

namespace agraded::cli {

// Exit codes: 0 = success / property holds, 1 = property violated,
// 2 = input or usage error.

namespace detail {

inline std::vector<long long> parse_csv(const std::string& s, const char* what) {
  std::vector<long long> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw input_error(std::string("bad ") + what + " entry '" + item + "'");
    }
  }
  if (out.empty()) throw input_error(std::string("empty ") + what + " list");
  return out;
}

inline ExponentVector box_for(const std::string& flag, int n,
                              const ExponentVector& fallback) {
  if (flag.empty()) return fallback;
  auto v = parse_csv(flag, "box");
  if (static_cast<int>(v.size()) != n)
    throw input_error("--box must list one bound per variable");
  std::vector<int> b;
  for (long long x : v) {
    if (x < 0) throw input_error("--box entries must be nonnegative");
    b.push_back(static_cast<int>(x));
  }
  return ExponentVector(std::move(b));
}

inline ExponentVector staircase_plus(const MonomialIdeal& ideal, int extra) {
  std::vector<int> b(ideal.staircase_bounds().coords());
  for (auto& x : b) x = checked_add(x, extra);
  return ExponentVector(std::move(b));
}

inline TermOrder order_from_flags(int n, const std::string& weights,
                                  const std::string& tiebreak) {
  std::vector<long long> w(static_cast<size_t>(n), 1);
  if (!weights.empty()) {
    auto v = parse_csv(weights, "weights");
    if (static_cast<int>(v.size()) != n)
      throw input_error("--weights must list one weight per variable");
    w = v;
  }
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  if (!tiebreak.empty()) {
    auto v = parse_csv(tiebreak, "tiebreak");
    if (static_cast<int>(v.size()) != n)
      throw input_error("--tiebreak must be a permutation of 1.." + std::to_string(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = static_cast<int>(v[static_cast<size_t>(i)]) - 1;
  }
  return TermOrder(std::move(w), std::move(perm));
}

inline std::string yesno(bool b) { return b ? "yes" : "no"; }

inline std::string format_llvec(const std::vector<long long>& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i)
    out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

inline std::string format_ivec(const intlin::IVec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i)
    out += (i ? "," : "") + v[i].get_str();
  return out + ")";
}

}  // namespace detail

inline int cmd_std_pairs(const std::string& ideal_path, std::ostream& out) {
  auto file = io::load_ideal(ideal_path);
  MonomialIdeal ideal = file.monomial_ideal();
  StandardPairBasis basis = compute_standard_pairs(ideal);
  for (const auto& p : basis.pairs())
    out << io::format_pair(p, ideal.variable_names()) << '\n';
  out << "# pairs=" << basis.size() << '\n';
  out << "# faces=" << basis.faces().size() << '\n';
  return 0;
}

inline int cmd_ass_primes(const std::string& ideal_path, std::ostream& out) {
  auto file = io::load_ideal(ideal_path);
  MonomialIdeal ideal = file.monomial_ideal();
  StandardPairBasis basis = compute_standard_pairs(ideal);
  const auto& names = ideal.variable_names();
  for (const Face& f : associated_primes(basis)) {
    Face complement = f.complement_in(ideal.var_count());
    out << "P" << io::format_face(f, names) << " = (";
    bool first = true;
    for (int i : complement.members()) {
      if (!first) out << ", ";
      out << names[static_cast<size_t>(i)];
      first = false;
    }
    out << ")  height " << ideal.var_count() - f.size() << '\n';
  }
  out << "# primes=" << associated_primes(basis).size() << '\n';
  return 0;
}

inline int cmd_chain_check(const std::string& ideal_path, std::ostream& out) {
  auto file = io::load_ideal(ideal_path);
  MonomialIdeal ideal = file.monomial_ideal();
  StandardPairBasis basis = compute_standard_pairs(ideal);
  ChainReport report = chain_check(basis);
  const auto& names = ideal.variable_names();
  out << "faces:";
  for (const Face& f : report.faces) out << ' ' << io::format_face(f, names);
  out << '\n';
  for (const Face& f : report.violations)
    out << "violation: face " << io::format_face(f, names)
        << " has no superset face with one more element\n";
  out << "# holds=" << (report.holds ? "true" : "false") << '\n';
  out << "# violations=" << report.violations.size() << '\n';
  return report.holds ? 0 : 1;
}

inline int cmd_decompose(const std::string& ideal_path, const std::string& box_flag,
                         std::ostream& out) {
  auto file = io::load_ideal(ideal_path);
  MonomialIdeal ideal = file.monomial_ideal();
  StandardPairBasis basis = compute_standard_pairs(ideal);
  auto components = primary_decomposition(basis);
  ExponentVector box = detail::box_for(box_flag, ideal.var_count(),
                                       detail::staircase_plus(ideal, 2));
  bool ok = verify_decomposition(ideal, components, box);
  auto redundant = redundancy_flags(ideal, components, box);
  const auto& names = ideal.variable_names();
  for (size_t i = 0; i < components.size(); ++i) {
    out << "component " << io::format_face(components[i].face, names) << ": (";
    const auto& gens = components[i].ideal.generators();
    for (size_t j = 0; j < gens.size(); ++j)
      out << (j ? ", " : "") << io::format_monomial(gens[j], names);
    out << ")";
    if (redundant[i]) out << "  [redundant on box]";
    out << '\n';
  }
  out << "intersection equals ideal on box: " << detail::yesno(ok) << '\n';
  out << "# components=" << components.size() << '\n';
  out << "# box=" << io::format_monomial(box, names) << '\n';
  out << "# verified=" << (ok ? "true" : "false") << '\n';
  return ok ? 0 : 1;
}

inline int cmd_verify_agraded(const std::string& ideal_path,
                              const std::string& matrix_path,
                              const std::string& box_flag, std::ostream& out) {
  auto file = io::load_ideal(ideal_path);
  MonomialIdeal ideal = file.monomial_ideal();
  GradingMap map = io::load_matrix(matrix_path);
  if (box_flag.empty()) throw input_error("--box is required");
  auto box = detail::parse_csv(box_flag, "box");
  AgradedReport report = verify_agraded(ideal, map, box);
  out << "degrees checked: " << report.degrees_checked << '\n';
  for (const auto& v : report.violations)
    out << "violation: degree " << detail::format_llvec(v.degree) << " has "
        << v.standard_count << " standard monomials\n";
  out << "certified up to box " << detail::format_llvec(report.box) << " only\n";
  out << "# box=" << detail::format_llvec(report.box) << '\n';
  out << "# violations=" << report.violations.size() << '\n';
  out << "# pass=" << (report.pass ? "true" : "false") << '\n';
  return report.pass ? 0 : 1;
}

inline int cmd_triangulate(const std::string& ideal_path,
                           const std::string& matrix_path, std::ostream& out) {
  auto file = io::load_ideal(ideal_path);
  MonomialIdeal ideal = file.monomial_ideal();
  GradingMap map = io::load_matrix(matrix_path);
  StandardPairBasis basis = compute_standard_pairs(ideal);
  TriangulationReport report = triangulation(basis, map);
  const auto& names = ideal.variable_names();
  for (size_t i = 0; i < report.cells.size(); ++i) {
    out << "cell " << io::format_face(report.cell_faces[i], names) << ": rays";
    for (const auto& ray : report.cells[i].rays)
      out << ' ' << detail::format_ivec(ray);
    out << '\n';
  }
  for (const auto& v : report.violations) out << "violation: " << v << '\n';
  out << "# cells=" << report.cells.size() << '\n';
  out << "# valid=" << (report.valid ? "true" : "false") << '\n';
  return report.valid ? 0 : 1;
}

inline int cmd_toric_gb(const std::string& matrix_path, const std::string& weights,
                        const std::string& tiebreak, bool initial_only,
                        std::ostream& out) {
  GradingMap map = io::load_matrix(matrix_path);
  TermOrder order = detail::order_from_flags(map.var_count(), weights, tiebreak);
  GroebnerBasis basis = toric_groebner(map, order);
  auto names = default_variable_names(map.var_count());
  if (initial_only) {
    MonomialIdeal init = initial_ideal(basis, names);
    for (const auto& g : init.generators())
      out << io::format_monomial(g, names) << '\n';
    out << "# generators=" << init.generators().size() << '\n';
    return 0;
  }
  for (const auto& e : basis.elements()) {
    out << io::format_monomial(e.lead, names);
    if (e.tail) out << " - " << io::format_monomial(*e.tail, names);
    out << '\n';
  }
  out << "# size=" << basis.elements().size() << '\n';
  return 0;
}

inline int cmd_saturated_check(const std::string& ideal_path,
                               const std::string& box_flag, std::ostream& out) {
  auto file = io::load_ideal(ideal_path);
  BinomialIdeal ideal = file.binomial_ideal();
  ExponentVector box = detail::box_for(box_flag, ideal.n, default_box(ideal));
  DifferenceLattice k = difference_lattice(ideal, box);
  out << "K(I) basis:";
  if (k.is_zero()) out << " 0";
  for (const auto& row : k.basis()) out << ' ' << detail::format_ivec(row);
  out << '\n';
  SaturationReport report = is_saturated(ideal, box);
  out << "saturated on box: " << detail::yesno(report.saturated) << '\n';
  if (report.witness) {
    out << "witness: " << io::format_monomial(report.witness->first, ideal.names)
        << " - " << io::format_monomial(report.witness->second, ideal.names)
        << " is not in the ideal\n";
  }
  out << "# box=" << io::format_monomial(box, ideal.names) << '\n';
  out << "# saturated=" << (report.saturated ? "true" : "false") << '\n';
  return report.saturated ? 0 : 1;
}

inline int cmd_verify_decomposition(const std::string& ideal_path,
                                    const std::string& box_flag,
                                    std::ostream& out) {
  auto file = io::load_ideal(ideal_path);
  if (!file.is_binomial()) {
    MonomialIdeal ideal = file.monomial_ideal();
    StandardPairBasis basis = compute_standard_pairs(ideal);
    auto components = primary_decomposition(basis);
    ExponentVector box = detail::box_for(box_flag, ideal.var_count(),
                                         detail::staircase_plus(ideal, 2));
    bool ok = verify_decomposition(ideal, components, box);
    out << "components: " << components.size() << '\n';
    out << "# box=" << io::format_monomial(box, ideal.variable_names()) << '\n';
    out << "# verified=" << (ok ? "true" : "false") << '\n';
    return ok ? 0 : 1;
  }
  BinomialIdeal ideal = file.binomial_ideal();
  ExponentVector box = detail::box_for(box_flag, ideal.n, default_box(ideal));
  bool ok = verify_primary_decomposition(ideal, box);
  out << "# box=" << io::format_monomial(box, ideal.names) << '\n';
  out << "# verified=" << (ok ? "true" : "false") << '\n';
  return ok ? 0 : 1;
}

inline int cmd_enumerate_agraded(const std::string& matrix_path,
                                 const std::string& bound_flag,
                                 std::ostream& out) {
  GradingMap map = io::load_matrix(matrix_path);
  if (bound_flag.empty()) throw input_error("--bound is required");
  auto bound = detail::parse_csv(bound_flag, "bound");
  if (bound.size() == 1 && map.target_rank() > 1)
    bound.assign(static_cast<size_t>(map.target_rank()), bound[0]);
  auto candidates = enumerate_agraded(map, bound);
  auto names = default_variable_names(map.var_count());
  for (size_t i = 0; i < candidates.size(); ++i) {
    out << "candidate " << i + 1 << ": ideal (";
    const auto& gens = candidates[i].truncated_ideal.generators();
    for (size_t j = 0; j < gens.size(); ++j)
      out << (j ? ", " : "") << io::format_monomial(gens[j], names);
    out << ")\n";
  }
  out << "certified up to degree bound " << detail::format_llvec(bound)
      << " only\n";
  out << "# bound=" << detail::format_llvec(bound) << '\n';
  out << "# candidates=" << candidates.size() << '\n';
  return 0;
}

inline int cmd_counterexample_verify(std::ostream& out) {
  auto report = counterexample::verify();
  auto names = counterexample::variable_names();
  out << "[1] pointed grading map: " << detail::yesno(report.pointed) << '\n';
  out << "[2] standard pairs: computed " << report.computed_pair_count
      << ", matches the transcribed list: " << detail::yesno(report.pairs_match)
      << " (" << report.dominant_pair_count << " dominant)" << '\n';
  out << "[3] associated primes: " << report.primes.size() << " faces";
  for (const Face& f : report.primes) out << ' ' << io::format_face(f, names);
  out << "; chain violated exactly at <>: "
      << detail::yesno(report.chain_violated_exactly_at_empty) << '\n';
  out << "[4] A-graded on box (6,6,6): " << detail::yesno(report.agraded.pass)
      << " (" << report.agraded.degrees_checked << " degrees); degree (1,1,1) "
      << "has unique standard preimage f1 f2 f3: "
      << detail::yesno(report.missing_triple_ok) << '\n';
  out << "[5] triangulation is the single full-orthant cell: "
      << detail::yesno(report.single_octant_cell) << '\n';
  out << "[6] quotient by <e1,e2,e3> is Z/2 x Z/2 x Z/2 and the 8 layer "
      << "roots hit each class once: " << detail::yesno(report.quotient_bijection)
      << '\n';
  out << "overall: " << (report.pass ? "PASS" : "FAIL") << '\n';
  out << "# pass=" << (report.pass ? "true" : "false") << '\n';
  out << "# chain_violation_faces=" << report.chain.violations.size() << '\n';
  return report.pass ? 0 : 1;
}

inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"standard pairs, primary decomposition and chain-property "
               "audits for monomial and pure-difference binomial ideals"};
  app.require_subcommand(1);

  std::string ideal_path, matrix_path, box_flag, weights_flag, tiebreak_flag,
      bound_flag;

  auto* sp = app.add_subcommand("std-pairs", "standard pairs of a monomial ideal");
  sp->add_option("ideal", ideal_path, "ideal file")->required();

  auto* ap = app.add_subcommand("ass-primes", "associated primes via standard pairs");
  ap->add_option("ideal", ideal_path, "ideal file")->required();

  auto* cc = app.add_subcommand("chain-check", "audit the chain property");
  cc->add_option("ideal", ideal_path, "ideal file")->required();

  auto* dc = app.add_subcommand("decompose", "primary decomposition of a monomial ideal");
  dc->add_option("ideal", ideal_path, "ideal file")->required();
  dc->add_option("--box", box_flag, "verification box, comma-separated");

  auto* va = app.add_subcommand("verify-agraded", "bounded A-gradedness certificate");
  va->add_option("ideal", ideal_path, "ideal file")->required();
  va->add_option("matrix", matrix_path, "grading matrix file")->required();
  va->add_option("--box", box_flag, "degree box, comma-separated")->required();

  auto* tr = app.add_subcommand("triangulate", "cone triangulation from standard pairs");
  tr->add_option("ideal", ideal_path, "ideal file")->required();
  tr->add_option("matrix", matrix_path, "grading matrix file")->required();

  auto* tg = app.add_subcommand("toric-gb", "reduced Groebner basis of the toric ideal");
  tg->add_option("matrix", matrix_path, "grading matrix file")->required();
  tg->add_option("--weights", weights_flag, "order weights, comma-separated");
  tg->add_option("--tiebreak", tiebreak_flag, "variable permutation, 1-based");

  auto* in = app.add_subcommand("initial", "initial ideal of the toric ideal");
  in->add_option("matrix", matrix_path, "grading matrix file")->required();
  in->add_option("--weights", weights_flag, "order weights, comma-separated");
  in->add_option("--tiebreak", tiebreak_flag, "variable permutation, 1-based");

  auto* sc = app.add_subcommand("saturated-check", "difference lattice and saturation test");
  sc->add_option("ideal", ideal_path, "ideal file")->required();
  sc->add_option("--box", box_flag, "verification box, comma-separated");

  auto* vd = app.add_subcommand("verify-decomposition",
                                "bounded primary-decomposition check");
  vd->add_option("ideal", ideal_path, "ideal file")->required();
  vd->add_option("--box", box_flag, "verification box, comma-separated");

  auto* ea = app.add_subcommand("enumerate-agraded",
                                "truncated A-graded standard-monomial sets");
  ea->add_option("matrix", matrix_path, "grading matrix file")->required();
  ea->add_option("--bound", bound_flag, "degree bound, comma-separated")->required();

  auto* ce = app.add_subcommand("counterexample",
                                "the built-in 16-variable chain-property example");
  ce->require_subcommand(1);
  auto* cev = ce->add_subcommand("verify", "run the full verification pipeline");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (sp->parsed()) return cmd_std_pairs(ideal_path, out);
    if (ap->parsed()) return cmd_ass_primes(ideal_path, out);
    if (cc->parsed()) return cmd_chain_check(ideal_path, out);
    if (dc->parsed()) return cmd_decompose(ideal_path, box_flag, out);
    if (va->parsed()) return cmd_verify_agraded(ideal_path, matrix_path, box_flag, out);
    if (tr->parsed()) return cmd_triangulate(ideal_path, matrix_path, out);
    if (tg->parsed()) return cmd_toric_gb(matrix_path, weights_flag, tiebreak_flag, false, out);
    if (in->parsed()) return cmd_toric_gb(matrix_path, weights_flag, tiebreak_flag, true, out);
    if (sc->parsed()) return cmd_saturated_check(ideal_path, box_flag, out);
    if (vd->parsed()) return cmd_verify_decomposition(ideal_path, box_flag, out);
    if (ea->parsed()) return cmd_enumerate_agraded(matrix_path, bound_flag, out);
    if (ce->parsed() && cev->parsed()) return cmd_counterexample_verify(out);
  } catch (const io::parse_error& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const input_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

inline int run_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(std::move(args), std::cout, std::cerr);
}

}  // namespace agraded::cli
