#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "horncalc/complexity.hpp"
#include "horncalc/horn.hpp"
#include "horncalc/solver.hpp"

namespace horncalc::io {

using nlohmann::json;

// System schema: {"matrix": [[a,b], ...], "c": ["r", ...]} with row order
// significant. A Gamma-product file {"factors": [{"vector": [a,b],
// "constant": "r", "multiplicity": m}, ...]} is accepted wherever a system is.
HornSystem system_from_json(const json& j);
json system_to_json(const HornSystem& sys);

// Polynomial schema: {"terms": [["s", "t", "coeff"], ...]} in canonical order.
PuiseuxPoly poly_from_json(const json& j);
json poly_to_json(const PuiseuxPoly& p);

json support_to_json(const Support& s);
Support support_from_json(const json& j);

json rank_to_json(const RankBreakdown& r);
json pairing_to_json(const ZonotopePairing& p);
json polygon_to_json(const LatticePolygon& p);
json operator_to_json(const HornOperator& op);
json support_report_to_json(const SupportReport& r);
json basis_to_json(const SolutionBasis& b);
json bound_to_json(const ComplexityBound& b);
json zonotope_bound_to_json(const ZonotopeBoundResult& r);

json load_file(const std::string& path);
void save_file(const std::string& path, const std::string& content);

// A named example system plus the values its regression tests pin down. Every
// expectation block carries a source note saying how the value was obtained.
struct Fixture {
  std::string name;
  HornSystem system;
  std::string note;
  std::optional<long> expected_rank;
  std::optional<std::vector<Rational>> expected_c_hat_sorted;
  std::optional<long> expected_raw_bound, expected_refined_bound;
  std::optional<bool> expected_polynomial_regime;
  std::string expectation_source;
};

Fixture fixture_from_json(const json& j);

}  // namespace horncalc::io
