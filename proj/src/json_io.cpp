#include "horncalc/json_io.hpp"

#include <fstream>
#include <sstream>

#include "horncalc/errors.hpp"

namespace horncalc::io {

namespace {

Rational rational_field(const json& j, const char* where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw ParseError(std::string("expected integer or rational string in ") + where);
}

long integer_field(const json& j, const char* where) {
  if (!j.is_number_integer())
    throw ParseError(std::string("expected integer in ") + where);
  return j.get<long>();
}

}  // namespace

HornSystem system_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("system file must hold a JSON object");
  if (j.contains("factors")) {
    std::vector<GammaFactor> factors;
    for (const json& f : j.at("factors")) {
      GammaFactor g;
      const json& v = f.at("vector");
      if (!v.is_array() || v.size() != 2) throw ParseError("gamma vector must have 2 entries");
      g.vector = {integer_field(v[0], "factors.vector"), integer_field(v[1], "factors.vector")};
      g.constant = rational_field(f.at("constant"), "factors.constant");
      g.multiplicity = f.contains("multiplicity") ? integer_field(f.at("multiplicity"), "factors.multiplicity") : 1;
      factors.push_back(std::move(g));
    }
    return from_gamma_products(factors);
  }
  if (!j.contains("matrix") || !j.contains("c"))
    throw ParseError("system file needs 'matrix' and 'c' (or 'factors')");
  HornSystem sys;
  for (const json& row : j.at("matrix")) {
    if (!row.is_array() || row.size() != 2) throw ParseError("matrix rows must have 2 entries");
    sys.rows.push_back({integer_field(row[0], "matrix"), integer_field(row[1], "matrix")});
  }
  for (const json& entry : j.at("c")) sys.c.push_back(rational_field(entry, "c"));
  sys.validate();
  return sys;
}

json system_to_json(const HornSystem& sys) {
  json rows = json::array(), params = json::array();
  for (const IntVec2& r : sys.rows) rows.push_back({r[0], r[1]});
  for (const Rational& x : sys.c) params.push_back(x.str());
  return {{"matrix", rows}, {"c", params}};
}

PuiseuxPoly poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms"))
    throw ParseError("polynomial file needs a 'terms' array");
  PuiseuxPoly p;
  for (const json& t : j.at("terms")) {
    if (!t.is_array() || t.size() != 3) throw ParseError("each term must be [s, t, coeff]");
    ExponentPoint e{rational_field(t[0], "terms"), rational_field(t[1], "terms")};
    p.add_term(e, rational_field(t[2], "terms"));
  }
  return p;
}

json poly_to_json(const PuiseuxPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e.s.str(), e.t.str(), c.str()});
  return {{"terms", terms}};
}

json support_to_json(const Support& s) {
  json pts = json::array();
  for (const ExponentPoint& e : s) pts.push_back({e.s.str(), e.t.str()});
  return pts;
}

Support support_from_json(const json& j) {
  Support s;
  const json& pts = j.is_object() && j.contains("support") ? j.at("support") : j;
  if (!pts.is_array()) throw ParseError("support must be an array of [s, t] pairs");
  for (const json& p : pts) {
    if (!p.is_array() || p.size() != 2) throw ParseError("support points must be [s, t]");
    s.insert({rational_field(p[0], "support"), rational_field(p[1], "support")});
  }
  return s;
}

json rank_to_json(const RankBreakdown& r) {
  json corr = json::array();
  for (const auto& c : r.corrections) corr.push_back({c.i, c.j, c.nu});
  return {{"d1", r.d1}, {"d2", r.d2}, {"corrections", corr}, {"rank", r.rank}};
}

json pairing_to_json(const ZonotopePairing& p) {
  json pairs = json::array(), a_hat = json::array();
  json alpha = json::array(), beta = json::array(), c_hat = json::array();
  for (const auto& pr : p.pairs) pairs.push_back({pr.plus, pr.minus});
  for (const IntVec2& r : p.a_hat) a_hat.push_back({r[0], r[1]});
  for (const Rational& x : p.alpha) alpha.push_back(x.str());
  for (const Rational& x : p.beta) beta.push_back(x.str());
  for (const Rational& x : p.c_hat) c_hat.push_back(x.str());
  return {{"pairs", pairs},       {"a_hat", a_hat}, {"alpha", alpha}, {"beta", beta},
          {"c_hat", c_hat},       {"alternative_matchings", p.alternative_matchings}};
}

json polygon_to_json(const LatticePolygon& p) {
  json sides = json::array(), verts = json::array(), segs = json::array();
  for (const auto& s : p.sides)
    sides.push_back({{"normal", {s.normal[0], s.normal[1]}},
                     {"tangent", {s.tangent[0], s.tangent[1]}},
                     {"multiplicity", s.multiplicity}});
  for (const IntVec2& v : p.vertices) verts.push_back({v[0], v[1]});
  for (const IntVec2& v : p.minkowski_segments) segs.push_back({v[0], v[1]});
  json out = {{"sides", sides}, {"vertices", verts}};
  if (!p.minkowski_segments.empty()) out["minkowski_segments"] = segs;
  return out;
}

json operator_to_json(const HornOperator& op) {
  auto forms = [](const std::vector<AffineForm>& fs) {
    json arr = json::array();
    for (const AffineForm& f : fs)
      arr.push_back({{"a", f.a.str()}, {"b", f.b.str()}, {"gamma", f.gamma.str()}, {"text", f.str()}});
    return arr;
  };
  return {{"j", op.j}, {"P", forms(op.P)}, {"Q", forms(op.Q)}};
}

json support_report_to_json(const SupportReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    const char* status = e.status == PairStatus::admissible ? "admissible"
                         : e.status == PairStatus::skipped_nonpolynomial ? "skipped_nonpolynomial"
                                                                         : "skipped_singular";
    entries.push_back({{"pair", {e.i, e.j}}, {"status", status}, {"support", support_to_json(e.support)}});
  }
  return {{"pairs", entries}, {"union", support_to_json(r.union_support)}};
}

json basis_to_json(const SolutionBasis& b) {
  json elements = json::array(), residuals = json::array();
  for (const PuiseuxPoly& e : b.elements) elements.push_back(poly_to_json(e));
  for (const auto& r : b.residuals)
    residuals.push_back({poly_to_json(r[0]), poly_to_json(r[1])});
  return {{"dimension", b.elements.size()},
          {"elements", elements},
          {"residuals", residuals},
          {"certified", b.certified()}};
}

json bound_to_json(const ComplexityBound& b) {
  return {{"value", b.value}, {"rule", to_string(b.rule)}};
}

json zonotope_bound_to_json(const ZonotopeBoundResult& r) {
  json c_hat = json::array(), v = json::array();
  for (const Rational& x : r.vectors.c_hat_sorted) c_hat.push_back(x.str());
  for (long x : r.vectors.v) v.push_back(x);
  return {{"raw", bound_to_json(r.raw)},
          {"refined", bound_to_json(r.refined)},
          {"c_hat_sorted", c_hat},
          {"v", v}};
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

Fixture fixture_from_json(const json& j) {
  Fixture f;
  f.system = system_from_json(j);
  f.name = j.value("name", "");
  f.note = j.value("note", "");
  if (j.contains("expected")) {
    const json& e = j.at("expected");
    if (e.contains("rank")) f.expected_rank = e.at("rank").get<long>();
    if (e.contains("c_hat_sorted")) {
      std::vector<Rational> ch;
      for (const json& x : e.at("c_hat_sorted")) ch.push_back(rational_field(x, "expected.c_hat_sorted"));
      f.expected_c_hat_sorted = std::move(ch);
    }
    if (e.contains("raw_bound")) f.expected_raw_bound = e.at("raw_bound").get<long>();
    if (e.contains("refined_bound")) f.expected_refined_bound = e.at("refined_bound").get<long>();
    if (e.contains("polynomial_regime")) f.expected_polynomial_regime = e.at("polynomial_regime").get<bool>();
    f.expectation_source = e.value("source", "");
  }
  return f;
}

void save_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
  if (!out) throw Error("write failed: " + path);
}

}  // namespace horncalc::io
