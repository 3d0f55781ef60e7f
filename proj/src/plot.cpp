#include "horncalc/plot.hpp"

#include <algorithm>
#include <sstream>

#include "horncalc/errors.hpp"

namespace horncalc {

namespace {

// Exact fixed-point rendering with two decimals, round half away from zero.
std::string decimal2(const Rational& q) {
  mpz_class scaled_num = q.num() * 200;
  mpz_class den = q.den() * 2;
  mpz_class adjust = q.sign() < 0 ? -q.den() : q.den();
  mpz_class n;
  mpz_tdiv_q((n.get_mpz_t()), mpz_class(scaled_num + adjust).get_mpz_t(), den.get_mpz_t());
  bool neg = n < 0;
  if (neg) n = -n;
  mpz_class whole = n / 100, frac = n % 100;
  std::ostringstream os;
  if (neg) os << '-';
  os << whole.get_str() << '.';
  std::string f = frac.get_str();
  os << std::string(2 - f.size(), '0') << f;
  return os.str();
}

struct Frame {
  Rational smin, smax, tmin, tmax;
  long unit;
  // SVG coordinates: x grows with s, y grows downward with t
  Rational px(const Rational& s) const { return (s - smin) * Rational(unit); }
  Rational py(const Rational& t) const { return (tmax - t) * Rational(unit); }
};

Frame make_frame(const PlotSpec& spec) {
  Frame f;
  f.unit = spec.unit;
  if (spec.viewport) {
    f.smin = (*spec.viewport)[0];
    f.smax = (*spec.viewport)[1];
    f.tmin = (*spec.viewport)[2];
    f.tmax = (*spec.viewport)[3];
    return f;
  }
  bool first = true;
  for (const Support& s : spec.supports) {
    for (const ExponentPoint& p : s) {
      if (first) {
        f.smin = f.smax = p.s;
        f.tmin = f.tmax = p.t;
        first = false;
      } else {
        f.smin = std::min(f.smin, p.s);
        f.smax = std::max(f.smax, p.s);
        f.tmin = std::min(f.tmin, p.t);
        f.tmax = std::max(f.tmax, p.t);
      }
    }
  }
  if (first) {
    f.smin = f.tmin = Rational(0);
    f.smax = f.tmax = Rational(1);
  }
  Rational m(spec.margin);
  f.smin -= m;
  f.smax += m;
  f.tmin -= m;
  f.tmax += m;
  return f;
}

// Clip the line a*s + b*t + gamma = 0 to the frame rectangle; returns the two
// endpoints in exponent space, or nothing when the line misses the frame.
std::optional<std::array<ExponentPoint, 2>> clip_line(const AffineForm& line, const Frame& f) {
  std::vector<ExponentPoint> hits;
  auto push_unique = [&](const ExponentPoint& p) {
    for (const ExponentPoint& q : hits)
      if (q == p) return;
    hits.push_back(p);
  };
  if (!line.b.is_zero()) {
    for (const Rational& s : {f.smin, f.smax}) {
      Rational t = -(line.a * s + line.gamma) / line.b;
      if (t >= f.tmin && t <= f.tmax) push_unique({s, t});
    }
  }
  if (!line.a.is_zero()) {
    for (const Rational& t : {f.tmin, f.tmax}) {
      Rational s = -(line.b * t + line.gamma) / line.a;
      if (s >= f.smin && s <= f.smax) push_unique({s, t});
    }
  }
  if (hits.size() < 2) return std::nullopt;
  std::sort(hits.begin(), hits.end());
  return std::array<ExponentPoint, 2>{hits.front(), hits.back()};
}

}  // namespace

std::string render_svg(const PlotSpec& spec) {
  Frame f = make_frame(spec);
  Rational w = f.px(f.smax), h = f.py(f.tmin);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << decimal2(w) << "\" height=\""
     << decimal2(h) << "\" viewBox=\"0 0 " << decimal2(w) << " " << decimal2(h) << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << decimal2(w) << "\" height=\"" << decimal2(h)
     << "\" fill=\"white\"/>\n";

  // integer grid ticks
  os << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (mpz_class s = f.smin.floor() + 1; Rational(s) <= f.smax; ++s) {
    Rational x = f.px(Rational(s));
    os << "<line x1=\"" << decimal2(x) << "\" y1=\"0\" x2=\"" << decimal2(x) << "\" y2=\""
       << decimal2(h) << "\"/>\n";
  }
  for (mpz_class t = f.tmin.floor() + 1; Rational(t) <= f.tmax; ++t) {
    Rational y = f.py(Rational(t));
    os << "<line x1=\"0\" y1=\"" << decimal2(y) << "\" x2=\"" << decimal2(w) << "\" y2=\""
       << decimal2(y) << "\"/>\n";
  }
  os << "</g>\n";

  // axes
  os << "<g stroke=\"#555555\" stroke-width=\"2\">\n";
  if (f.smin <= Rational(0) && Rational(0) <= f.smax) {
    Rational x = f.px(Rational(0));
    os << "<line x1=\"" << decimal2(x) << "\" y1=\"0\" x2=\"" << decimal2(x) << "\" y2=\""
       << decimal2(h) << "\"/>\n";
  }
  if (f.tmin <= Rational(0) && Rational(0) <= f.tmax) {
    Rational y = f.py(Rational(0));
    os << "<line x1=\"0\" y1=\"" << decimal2(y) << "\" x2=\"" << decimal2(w) << "\" y2=\""
       << decimal2(y) << "\"/>\n";
  }
  os << "</g>\n";

  if (!spec.divisor_lines.empty()) {
    os << "<g stroke=\"#3366cc\" stroke-width=\"1\">\n";
    for (const AffineForm& line : spec.divisor_lines) {
      auto seg = clip_line(line, f);
      if (!seg) continue;
      os << "<line x1=\"" << decimal2(f.px((*seg)[0].s)) << "\" y1=\"" << decimal2(f.py((*seg)[0].t))
         << "\" x2=\"" << decimal2(f.px((*seg)[1].s)) << "\" y2=\"" << decimal2(f.py((*seg)[1].t))
         << "\"/>\n";
    }
    os << "</g>\n";
  }

  os << "<g fill=\"black\">\n";
  for (const Support& supp : spec.supports) {
    for (const ExponentPoint& p : supp) {
      os << "<circle cx=\"" << decimal2(f.px(p.s)) << "\" cy=\"" << decimal2(f.py(p.t))
         << "\" r=\"4\"/>\n";
    }
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string render_ascii(const PlotSpec& spec) {
  Support all;
  for (const Support& s : spec.supports) all.insert(s.begin(), s.end());
  if (all.empty()) return "(empty support)\n";

  mpz_class ls = 1, lt = 1;
  for (const ExponentPoint& p : all) {
    mpz_lcm(ls.get_mpz_t(), ls.get_mpz_t(), p.s.den().get_mpz_t());
    mpz_lcm(lt.get_mpz_t(), lt.get_mpz_t(), p.t.den().get_mpz_t());
  }
  Rational rls{mpz_class(ls)}, rlt{mpz_class(lt)};
  Rational smin = all.begin()->s, smax = smin, tmin = all.begin()->t, tmax = tmin;
  for (const ExponentPoint& p : all) {
    smin = std::min(smin, p.s);
    smax = std::max(smax, p.s);
    tmin = std::min(tmin, p.t);
    tmax = std::max(tmax, p.t);
  }

  // cell size: the exact lattice step when it fits, otherwise the smallest
  // multiple of it that keeps the grid within bounds
  const long max_cols = 160, max_rows = 80;
  auto cell_for = [](const Rational& lo, const Rational& hi, const Rational& lattice, long cap) {
    Rational cell = Rational(1) / lattice;
    while ((hi - lo) / cell > Rational(cap - 1)) cell += Rational(1) / lattice;
    return cell;
  };
  Rational cs = cell_for(smin, smax, rls, max_cols);
  Rational ct = cell_for(tmin, tmax, rlt, max_rows);

  std::set<std::pair<long, long>> cells;
  long col_max = 0, row_max = 0;
  for (const ExponentPoint& p : all) {
    long col = mpz_class(((p.s - smin) / cs).floor()).get_si();
    long row = mpz_class(((p.t - tmin) / ct).floor()).get_si();
    cells.insert({col, row});
    col_max = std::max(col_max, col);
    row_max = std::max(row_max, row);
  }

  std::ostringstream os;
  os << "s: [" << smin.str() << " .. " << smax.str() << "]  t: [" << tmin.str() << " .. "
     << tmax.str() << "]  lattice scale: " << ls.get_str() << "x" << lt.get_str()
     << "  cell: " << cs.str() << "x" << ct.str() << "\n";
  for (long row = row_max; row >= 0; --row) {
    for (long col = 0; col <= col_max; ++col) os << (cells.count({col, row}) ? '*' : '.');
    os << "\n";
  }
  return os.str();
}

}  // namespace horncalc
