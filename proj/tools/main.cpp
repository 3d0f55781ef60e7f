#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "horncalc/complexity.hpp"
#include "horncalc/errors.hpp"
#include "horncalc/horn.hpp"
#include "horncalc/json_io.hpp"
#include "horncalc/plot.hpp"
#include "horncalc/solver.hpp"

using namespace horncalc;
using horncalc::io::json;

namespace {

struct Options {
  std::string format = "text";
  std::string file;
  std::string poly_file;
  std::vector<long> box;
  std::string svg_path;
  bool ascii = false;
  bool allow_partial = false;
  std::vector<long> values;
};

void emit(const json& j, const std::string& text, const Options& opt) {
  if (opt.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

HornSystem load_system(const std::string& path) {
  return io::system_from_json(io::load_file(path));
}

std::string describe_rank(const RankBreakdown& r) {
  std::string out = "d1 = " + std::to_string(r.d1) + ", d2 = " + std::to_string(r.d2) + "\n";
  for (const auto& c : r.corrections)
    out += "nu(" + std::to_string(c.i) + "," + std::to_string(c.j) + ") = " + std::to_string(c.nu) + "\n";
  out += "rank = " + std::to_string(r.rank) + "\n";
  return out;
}

std::string describe_pairing(const ZonotopePairing& p) {
  std::string out;
  for (std::size_t i = 0; i < p.k(); ++i) {
    out += "pair " + std::to_string(i) + ": rows (" + std::to_string(p.pairs[i].plus) + ", " +
           std::to_string(p.pairs[i].minus) + ")  A_hat = (" + std::to_string(p.a_hat[i][0]) +
           ", " + std::to_string(p.a_hat[i][1]) + ")  alpha = " + p.alpha[i].str() +
           "  beta = " + p.beta[i].str() + "  c_hat = " + p.c_hat[i].str() + "\n";
  }
  if (p.alternative_matchings)
    out += "note: duplicate rows admit other matchings; individual c_hat entries may differ\n";
  return out;
}

int run_rank(const Options& opt) {
  HornSystem sys = load_system(opt.file);
  RankBreakdown r = holonomic_rank(sys);
  emit(io::rank_to_json(r), describe_rank(r), opt);
  return 0;
}

int run_operators(const Options& opt) {
  HornSystem sys = load_system(opt.file);
  json arr = json::array();
  std::string text;
  for (int j = 1; j <= 2; ++j) {
    HornOperator op = build_operator(sys, j);
    arr.push_back(io::operator_to_json(op));
    text += "equation " + std::to_string(j) + ":\n  P factors:\n";
    for (const AffineForm& f : op.P) text += "    " + f.str() + "\n";
    text += "  Q factors:\n";
    for (const AffineForm& f : op.Q) text += "    " + f.str() + "\n";
  }
  emit(arr, text, opt);
  return 0;
}

int run_polygon(const Options& opt) {
  HornSystem sys = load_system(opt.file);
  LatticePolygon poly = polygon(sys);
  std::string text = "vertices:";
  for (const IntVec2& v : poly.vertices)
    text += " (" + std::to_string(v[0]) + "," + std::to_string(v[1]) + ")";
  text += "\nsides (normal, tangent, multiplicity):\n";
  for (const auto& s : poly.sides)
    text += "  (" + std::to_string(s.normal[0]) + "," + std::to_string(s.normal[1]) + ")  (" +
            std::to_string(s.tangent[0]) + "," + std::to_string(s.tangent[1]) + ")  " +
            std::to_string(s.multiplicity) + "\n";
  if (!poly.minkowski_segments.empty()) {
    text += "minkowski segments:";
    for (const IntVec2& v : poly.minkowski_segments)
      text += " (" + std::to_string(v[0]) + "," + std::to_string(v[1]) + ")";
    text += "\n";
  }
  emit(io::polygon_to_json(poly), text, opt);
  return 0;
}

int run_pairing(const Options& opt) {
  HornSystem sys = load_system(opt.file);
  ZonotopePairing p = zonotope_pairing(sys);
  emit(io::pairing_to_json(p), describe_pairing(p), opt);
  return 0;
}

void require_regime_or_partial(const HornSystem& sys, const Options& opt) {
  ZonotopePairing pairing = zonotope_pairing(sys);
  if (!is_polynomial_regime(pairing) && !opt.allow_partial) throw NonPolynomialRegime();
}

int run_supports(const Options& opt) {
  HornSystem sys = load_system(opt.file);
  require_regime_or_partial(sys, opt);
  SupportReport report = candidate_supports(sys);
  std::string text;
  for (const auto& e : report.entries) {
    const char* status = e.status == PairStatus::admissible ? "admissible"
                         : e.status == PairStatus::skipped_nonpolynomial ? "skipped_nonpolynomial"
                                                                         : "skipped_singular";
    text += "pair (" + std::to_string(e.i) + "," + std::to_string(e.j) + "): " + status;
    if (e.status == PairStatus::admissible)
      text += ", " + std::to_string(e.support.size()) + " points";
    text += "\n";
  }
  text += "union: " + std::to_string(report.union_support.size()) + " points\n";
  emit(io::support_report_to_json(report), text, opt);
  return 0;
}

int run_solve(const Options& opt) {
  HornSystem sys = load_system(opt.file);
  SolutionBasis basis;
  if (!opt.box.empty()) {
    basis = solve_on_support(sys, box_support(opt.box[0], opt.box[1], opt.box[2], opt.box[3]));
  } else {
    require_regime_or_partial(sys, opt);
    basis = full_polynomial_basis(sys);
  }
  std::string text = "basis dimension: " + std::to_string(basis.elements.size()) + "\n";
  for (std::size_t i = 0; i < basis.elements.size(); ++i)
    text += "  [" + std::to_string(i) + "] " + std::to_string(basis.elements[i].term_count()) +
            " terms: " + basis.elements[i].str() + "\n";
  text += std::string("certified: ") + (basis.certified() ? "yes" : "no") + "\n";
  emit(io::basis_to_json(basis), text, opt);
  return 0;
}

int run_verify(const Options& opt) {
  HornSystem sys = load_system(opt.file);
  json pj = io::load_file(opt.poly_file);
  std::vector<PuiseuxPoly> polys;
  if (pj.contains("elements")) {
    for (const json& e : pj.at("elements")) polys.push_back(io::poly_from_json(e));
  } else {
    polys.push_back(io::poly_from_json(pj));
  }
  json arr = json::array();
  std::string text;
  bool all_zero = true;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    auto residuals = verify_solution(sys, polys[i]);
    bool ok = residuals[0].is_zero() && residuals[1].is_zero();
    all_zero = all_zero && ok;
    arr.push_back({{"index", i},
                   {"is_solution", ok},
                   {"residuals", {io::poly_to_json(residuals[0]), io::poly_to_json(residuals[1])}}});
    text += "[" + std::to_string(i) + "] " + (ok ? "solution (all residuals zero)" : "NOT a solution") + "\n";
    if (!ok) {
      text += "  residual 1: " + residuals[0].str() + "\n";
      text += "  residual 2: " + residuals[1].str() + "\n";
    }
  }
  emit(json{{"results", arr}, {"all_solutions", all_zero}}, text, opt);
  return 0;
}

int run_estimate(const Options& opt) {
  HornSystem sys = load_system(opt.file);
  ZonotopePairing pairing = zonotope_pairing(sys);
  ZonotopeBoundResult r = zonotope_bound(pairing);
  std::string text = "c_hat sorted:";
  for (const Rational& c : r.vectors.c_hat_sorted) text += " " + c.str();
  text += "\nv:";
  for (long v : r.vectors.v) text += " " + std::to_string(v);
  text += "\nraw bound: Cl_" + std::to_string(r.raw.value) +
          "\nrefined bound: Cl_" + std::to_string(r.refined.value) + "\n";
  emit(io::zonotope_bound_to_json(r), text, opt);
  return 0;
}

int run_poly_estimate(const Options& opt) {
  PuiseuxPoly p = io::poly_from_json(io::load_file(opt.file));
  if (p.is_zero()) throw ParseError("cannot estimate the zero polynomial");
  ComplexityBound b = poly_bound(p);
  emit(io::bound_to_json(b),
       "bound: Cl_" + std::to_string(b.value) + " (rule " + to_string(b.rule) + ")\n", opt);
  return 0;
}

int run_sum_estimate(const Options& opt) {
  for (long v : opt.values)
    if (v < 0) throw ParseError("complexity class indices are non-negative");
  ComplexityBound b = sum_bound(opt.values);
  emit(io::bound_to_json(b),
       "bound: Cl_" + std::to_string(b.value) + " (rule " + to_string(b.rule) + ")\n", opt);
  return 0;
}

int run_delta1(const Options& opt) {
  PuiseuxPoly p = io::poly_from_json(io::load_file(opt.file));
  PuiseuxPoly d = delta1(p);
  json j = io::poly_to_json(d);
  j["is_zero"] = d.is_zero();
  emit(j, std::string("delta1: ") + d.str() + "\n", opt);
  return 0;
}

int run_plot(const Options& opt) {
  json j = io::load_file(opt.file);
  PlotSpec spec;
  if (j.is_object() && (j.contains("matrix") || j.contains("factors"))) {
    HornSystem sys = io::system_from_json(j);
    SupportReport report = candidate_supports(sys);
    spec.supports.push_back(report.union_support);
    ZonotopePairing pairing = zonotope_pairing(sys);
    for (std::size_t i = 0; i < pairing.k(); ++i) {
      Rational a(pairing.a_hat[i][0]), b(pairing.a_hat[i][1]);
      spec.divisor_lines.push_back({a, b, pairing.alpha[i]});
      spec.divisor_lines.push_back({-a, -b, pairing.beta[i]});
    }
  } else if (j.is_object() && j.contains("terms")) {
    spec.supports.push_back(io::poly_from_json(j).support());
  } else {
    spec.supports.push_back(io::support_from_json(j));
  }
  if (opt.ascii) {
    std::cout << render_ascii(spec);
    return 0;
  }
  std::string svg = render_svg(spec);
  if (opt.svg_path.empty()) {
    std::cout << svg;
  } else {
    io::save_file(opt.svg_path, svg);
    std::cout << "wrote " << opt.svg_path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"horncalc: exact toolkit for bivariate Horn hypergeometric systems"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));

  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", opt.file, "input file")->required();
  };

  CLI::App* rank = app.add_subcommand("rank", "holonomic rank of a system");
  add_file(rank);
  CLI::App* operators = app.add_subcommand("operators", "P/Q factor lists of both equations");
  add_file(operators);
  CLI::App* poly = app.add_subcommand("polygon", "defining polygon and Minkowski segments");
  add_file(poly);
  CLI::App* pairing = app.add_subcommand("pairing", "plus/minus row pairing and c_hat");
  add_file(pairing);
  CLI::App* supports = app.add_subcommand("supports", "candidate solution supports per row pair");
  add_file(supports);
  supports->add_flag("--allow-partial", opt.allow_partial,
                     "proceed when some pairs are outside the polynomial regime");
  CLI::App* solve = app.add_subcommand("solve", "certified polynomial solution basis");
  add_file(solve);
  solve->add_option("--box", opt.box, "integer solve box: smin smax tmin tmax")->expected(4);
  solve->add_flag("--allow-partial", opt.allow_partial,
                  "proceed when some pairs are outside the polynomial regime");
  CLI::App* verify = app.add_subcommand("verify", "operator-application residuals of a polynomial");
  add_file(verify);
  verify->add_option("polynomial", opt.poly_file, "polynomial file")->required();
  CLI::App* estimate = app.add_subcommand("estimate", "zonotope analytic-complexity bounds");
  add_file(estimate);
  CLI::App* poly_estimate = app.add_subcommand("poly-estimate", "slice-decomposition bound for a polynomial");
  add_file(poly_estimate);
  CLI::App* sum_estimate = app.add_subcommand("sum-estimate", "pairing bound for a sum of functions");
  sum_estimate->add_option("values", opt.values, "complexity class indices")->required();
  CLI::App* delta = app.add_subcommand("delta1", "the Cl_1 differential polynomial of a function");
  add_file(delta);
  CLI::App* plot = app.add_subcommand("plot", "SVG or ascii support plot");
  add_file(plot);
  plot->add_option("--svg", opt.svg_path, "write SVG to this path");
  plot->add_flag("--ascii", opt.ascii, "ascii grid on stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage errors count as malformed input
  }

  try {
    if (rank->parsed()) return run_rank(opt);
    if (operators->parsed()) return run_operators(opt);
    if (poly->parsed()) return run_polygon(opt);
    if (pairing->parsed()) return run_pairing(opt);
    if (supports->parsed()) return run_supports(opt);
    if (solve->parsed()) return run_solve(opt);
    if (verify->parsed()) return run_verify(opt);
    if (estimate->parsed()) return run_estimate(opt);
    if (poly_estimate->parsed()) return run_poly_estimate(opt);
    if (sum_estimate->parsed()) return run_sum_estimate(opt);
    if (delta->parsed()) return run_delta1(opt);
    if (plot->parsed()) return run_plot(opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const NotApplicable& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
