#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "horncalc/puiseux.hpp"

namespace horncalc {

// Deterministic support plot: fixed lattice unit, one circle per point,
// optional divisor lines (zero sets of affine forms), no timestamps.
struct PlotSpec {
  std::vector<Support> supports;
  std::vector<AffineForm> divisor_lines;
  // smin, smax, tmin, tmax in exponent space; computed from the supports
  // (plus margin) when unset
  std::optional<std::array<Rational, 4>> viewport;
  long unit = 24;    // pixels per lattice unit
  long margin = 1;   // extra lattice units around the bounding box
};

std::string render_svg(const PlotSpec& spec);
std::string render_ascii(const PlotSpec& spec);

}  // namespace horncalc
