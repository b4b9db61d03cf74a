#include "hedra/farey.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hedra/errors.hpp"
#include "hedra/secondary.hpp"

namespace hedra {

DiscPoint halfplane_to_disc(const Rational& t) {
  if (t.is_infinity()) return {Rational(-1, 1), Rational(0, 1)};
  Rational p(t.num(), 1), q(t.den(), 1);
  Rational pp = p * p, qq = q * q;
  Rational den = pp + qq;
  return {(qq - pp) / den, (Rational(2, 1) * p * q) / den};
}

namespace {

void expand_arcs(const Rational& lo, const Rational& hi, int max_den,
                 std::vector<RationalArc>& out) {
  out.push_back({lo, hi});
  if (out.size() > 2'000'000)
    throw capacity_error("rational arc enumeration too large");
  Rational med = mediant(lo, hi);
  if (med.den() <= max_den) {
    expand_arcs(lo, med, max_den, out);
    expand_arcs(med, hi, max_den, out);
  }
}

}  // namespace

std::vector<RationalArc> enumerate_rational_arcs(int max_den,
                                                 const Rational& lo,
                                                 const Rational& hi) {
  if (max_den < 1) throw std::invalid_argument("max_den must be at least 1");
  if (lo.is_infinity() || hi.is_infinity())
    throw std::invalid_argument("arc enumeration needs finite endpoints");
  if (!(lo < hi)) throw std::invalid_argument("arc endpoints out of order");
  if (!is_farey_neighbor(lo, hi))
    throw std::invalid_argument("arc endpoints are not Farey neighbors");
  if (lo.den() > max_den || hi.den() > max_den)
    throw std::invalid_argument("seed endpoints exceed max_den");
  std::vector<RationalArc> out;
  expand_arcs(lo, hi, max_den, out);
  return out;
}

std::vector<RationalArc> enumerate_rational_arcs(int max_den) {
  return enumerate_rational_arcs(max_den, Rational(0, 1), Rational(1, 1));
}

bool is_dyadic_farey_arc(const Dyadic& u, const Dyadic& v) {
  Dyadic a = u.mod1(), b = v.mod1();
  if (a == b) return false;
  int d = std::max(a.depth(), b.depth());
  if (d < 1) return false;
  Dyadic gap(1, d);
  return (b - a).mod1() == gap || (a - b).mod1() == gap;
}

std::vector<std::pair<Dyadic, Dyadic>> enumerate_dyadic_arcs(int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  if (depth > 20) throw capacity_error("dyadic arc enumeration too deep");
  std::vector<std::pair<Dyadic, Dyadic>> out;
  out.push_back({Dyadic::zero(), Dyadic::half()});
  for (int k = 2; k <= depth; ++k) {
    long long cells = 1ll << k;
    for (long long j = 0; j < cells; ++j) {
      Dyadic a(j, k), b = (j + 1 == cells) ? Dyadic::zero() : Dyadic(j + 1, k);
      if (b < a) std::swap(a, b);
      out.push_back({a, b});
    }
  }
  return out;
}

bool validate_dyadic_partition(const std::vector<Dyadic>& points) {
  if (points.size() < 2)
    throw std::invalid_argument("a partition needs at least 2 points");
  std::vector<Dyadic> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < Dyadic::zero() || !(sorted.back() < Dyadic::one()))
    throw std::invalid_argument("partition points must lie in [0,1)");
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i - 1] == sorted[i])
      throw std::invalid_argument("duplicate partition point");

  // Interval [a, b] (b may be a+1 for the wrap cell) is standard dyadic iff
  // its length is 1/2^k and a is a multiple of 1/2^k.
  auto standard = [](const Dyadic& a, const Dyadic& len) {
    return len.num() == 1 && a.depth() <= len.exp();
  };
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
    if (!standard(sorted[i], sorted[i + 1] - sorted[i])) return false;
  return standard(sorted.back(), sorted.front() + Dyadic::one() - sorted.back());
}

DyadicPartition::DyadicPartition(std::vector<Dyadic> points)
    : points_(std::move(points)) {
  if (!validate_dyadic_partition(points_))
    throw std::invalid_argument("not a dyadic partition");
  std::sort(points_.begin(), points_.end());
}

Dyadic DyadicPartition::cell_length(int i) const {
  std::size_t k = static_cast<std::size_t>(i);
  if (k + 1 < points_.size()) return points_[k + 1] - points_[k];
  return points_.front() + Dyadic::one() - points_.back();
}

std::strong_ordering DyadicPartition::operator<=>(
    const DyadicPartition& o) const {
  return points_ <=> o.points_;
}

std::string DyadicPartition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i) out += ',';
    out += points_[i].to_string();
  }
  return out;
}

DyadicPartition DyadicPartition::parse(const std::string& text) {
  std::vector<Dyadic> points;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string part = comma == std::string::npos
                           ? text.substr(pos)
                           : text.substr(pos, comma - pos);
    points.push_back(Dyadic::parse(part));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return DyadicPartition(std::move(points));
}

namespace {

struct Point2 {
  double x = 0;
  double y = 0;
};

std::string fmt(double v) { return format_significant(v); }

// One chord of the unit disc, rendered as a hyperbolic geodesic (circular arc
// orthogonal to the boundary) or a straight chord.
void append_chord(std::ostringstream& out, Point2 u, Point2 v, DiscModel model) {
  if (model == DiscModel::Klein) {
    out << "  <line x1=\"" << fmt(u.x) << "\" y1=\"" << fmt(u.y) << "\" x2=\""
        << fmt(v.x) << "\" y2=\"" << fmt(v.y) << "\"/>\n";
    return;
  }
  double det = u.x * v.y - u.y * v.x;
  if (std::abs(det) < 1e-12) {  // antipodal endpoints: the geodesic is a line
    out << "  <line x1=\"" << fmt(u.x) << "\" y1=\"" << fmt(u.y) << "\" x2=\""
        << fmt(v.x) << "\" y2=\"" << fmt(v.y) << "\"/>\n";
    return;
  }
  // Center of the circle through u and v orthogonal to the unit circle:
  // c.u = 1 and c.v = 1.
  Point2 c{(v.y - u.y) / det, (u.x - v.x) / det};
  double r = std::sqrt(c.x * c.x + c.y * c.y - 1.0);
  // The disc-interior arc's midpoint is the circle point nearest the origin.
  double norm_c = std::sqrt(c.x * c.x + c.y * c.y);
  Point2 w{c.x * (1.0 - r / norm_c), c.y * (1.0 - r / norm_c)};
  // Traversal u -> w -> v turns in the positive-angle direction of the
  // coordinate system exactly when the SVG sweep flag should be 1.
  double turn = (w.x - u.x) * (v.y - w.y) - (w.y - u.y) * (v.x - w.x);
  int sweep = turn > 0 ? 1 : 0;
  out << "  <path d=\"M " << fmt(u.x) << ' ' << fmt(u.y) << " A " << fmt(r)
      << ' ' << fmt(r) << " 0 0 " << sweep << ' ' << fmt(v.x) << ' '
      << fmt(v.y) << "\"/>\n";
}

std::string disc_svg(const std::vector<std::pair<Point2, Point2>>& chords,
                     DiscModel model) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
         "height=\"800\" viewBox=\"-1.05 -1.05 2.1 2.1\" fill=\"none\" "
         "stroke=\"black\" stroke-width=\"0.004\">\n";
  out << "  <circle cx=\"0\" cy=\"0\" r=\"1\" stroke-width=\"0.008\"/>\n";
  for (const auto& [u, v] : chords) append_chord(out, u, v, model);
  out << "</svg>\n";
  return out.str();
}

// Circle position t in [0,1) drawn with angle increasing counterclockwise on
// screen (SVG y points down, so the y coordinate is negated).
Point2 circle_point(double t) {
  double angle = 2.0 * std::numbers::pi * t;
  return {std::cos(angle), -std::sin(angle)};
}

}  // namespace

std::string svg_rational_halfplane(const std::vector<RationalArc>& arcs) {
  if (arcs.empty()) throw std::invalid_argument("no arcs to draw");
  double lo = arcs[0].lo.num() / double(arcs[0].lo.den());
  double hi = lo;
  double max_r = 0;
  for (const RationalArc& a : arcs) {
    double x1 = a.lo.num() / double(a.lo.den());
    double x2 = a.hi.num() / double(a.hi.den());
    lo = std::min(lo, x1);
    hi = std::max(hi, x2);
    max_r = std::max(max_r, (x2 - x1) / 2.0);
  }
  double pad = (hi - lo) * 0.05;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\""
      << fmt(800.0 * (max_r + 2 * pad) / (hi - lo + 2 * pad))
      << "\" viewBox=\"" << fmt(lo - pad) << ' ' << fmt(-max_r - pad) << ' '
      << fmt(hi - lo + 2 * pad) << ' ' << fmt(max_r + 2 * pad)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\""
      << fmt((hi - lo) / 800.0) << "\">\n";
  out << "  <line x1=\"" << fmt(lo - pad) << "\" y1=\"0\" x2=\"" << fmt(hi + pad)
      << "\" y2=\"0\"/>\n";
  // Upper half-plane geodesics are semicircles; with the y axis pointing
  // down, sweep flag 1 from the left endpoint draws the arc above the axis.
  for (const RationalArc& a : arcs) {
    double x1 = a.lo.num() / double(a.lo.den());
    double x2 = a.hi.num() / double(a.hi.den());
    double r = (x2 - x1) / 2.0;
    out << "  <path d=\"M " << fmt(x1) << " 0 A " << fmt(r) << ' ' << fmt(r)
        << " 0 0 1 " << fmt(x2) << " 0\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string svg_rational_disc(const std::vector<RationalArc>& arcs,
                              DiscModel model) {
  std::vector<std::pair<Point2, Point2>> chords;
  chords.reserve(arcs.size());
  for (const RationalArc& a : arcs) {
    DiscPoint u = halfplane_to_disc(a.lo), v = halfplane_to_disc(a.hi);
    auto to_screen = [](const DiscPoint& p) {
      return Point2{p.x.num() / double(p.x.den()),
                    -(p.y.num() / double(p.y.den()))};
    };
    chords.push_back({to_screen(u), to_screen(v)});
  }
  return disc_svg(chords, model);
}

std::string svg_dyadic_disc(const std::vector<std::pair<Dyadic, Dyadic>>& arcs,
                            DiscModel model) {
  std::vector<std::pair<Point2, Point2>> chords;
  chords.reserve(arcs.size());
  for (const auto& [a, b] : arcs)
    chords.push_back({circle_point(a.to_double()), circle_point(b.to_double())});
  return disc_svg(chords, model);
}

std::string arcs_json(const std::vector<RationalArc>& arcs, int max_den,
                      const Rational& lo, const Rational& hi) {
  std::ostringstream out;
  out << "{\"max_den\":" << max_den << ",\"lo\":\"" << lo.to_string()
      << "\",\"hi\":\"" << hi.to_string() << "\",\"count\":" << arcs.size()
      << ",\"arcs\":[";
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i) out << ',';
    out << "[\"" << arcs[i].lo.to_string() << "\",\"" << arcs[i].hi.to_string()
        << "\"]";
  }
  out << "]}";
  return out.str();
}

std::string arcs_json(const std::vector<std::pair<Dyadic, Dyadic>>& arcs,
                      int depth) {
  std::ostringstream out;
  out << "{\"depth\":" << depth << ",\"count\":" << arcs.size() << ",\"arcs\":[";
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i) out << ',';
    out << "[\"" << arcs[i].first.to_string() << "\",\""
        << arcs[i].second.to_string() << "\"]";
  }
  out << "]}";
  return out.str();
}

}  // namespace hedra
