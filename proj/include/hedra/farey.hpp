#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hedra/dyadic.hpp"
#include "hedra/rational.hpp"

namespace hedra {

// Point on the unit circle with exact rational coordinates.
struct DiscPoint {
  Rational x;
  Rational y;
  bool operator==(const DiscPoint&) const = default;
};

// The Möbius transformation determined by 0 -> 1, 1 -> i, infinity -> -1,
// mapping the extended real line onto the unit circle:
// p/q -> ((q^2 - p^2) + 2pq i) / (p^2 + q^2), a rescaled Pythagorean triple.
DiscPoint halfplane_to_disc(const Rational& t);

// Chord of the rational Farey tessellation: a pair of Farey-neighbor
// endpoints on the extended real line, lo < hi.
struct RationalArc {
  Rational lo;
  Rational hi;
  bool operator==(const RationalArc&) const = default;
};

// All Farey-neighbor pairs with both denominators <= max_den inside [lo, hi],
// generated by pre-order mediant recursion from the seed arc (lo, hi).
// Requires finite Farey neighbors lo < hi and max_den >= max(lo.den, hi.den).
std::vector<RationalArc> enumerate_rational_arcs(int max_den,
                                                 const Rational& lo,
                                                 const Rational& hi);
std::vector<RationalArc> enumerate_rational_arcs(int max_den);

// Chords of the dyadic Farey tessellation of the disc, in circle coordinates
// t in [0,1) (point at angle 2*pi*t).  An arc is either the seed diameter
// {0, 1/2} or the endpoint pair of a standard dyadic interval
// [j/2^k, (j+1)/2^k] taken mod 1, k >= 1.
bool is_dyadic_farey_arc(const Dyadic& u, const Dyadic& v);

// All dyadic Farey arcs whose standard interval has depth <= depth (the seed
// diameter plus every standard interval of depth 2..depth), as unordered
// chords with endpoints sorted ascending in [0,1).  Requires depth >= 1.
std::vector<std::pair<Dyadic, Dyadic>> enumerate_dyadic_arcs(int depth);

// True iff every consecutive cyclic interval between the given circle
// positions is standard dyadic.  Requires >= 2 points in [0,1); duplicates
// throw std::invalid_argument.
bool validate_dyadic_partition(const std::vector<Dyadic>& points);

// A partition of the circle into m >= 2 standard dyadic intervals (the corner
// set of an ideal Farey polygon).  Points are stored sorted ascending; any
// valid partition contains 0.
class DyadicPartition {
 public:
  explicit DyadicPartition(std::vector<Dyadic> points);

  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<Dyadic>& points() const { return points_; }
  const Dyadic& point(int i) const { return points_[static_cast<std::size_t>(i)]; }
  // Length of cell i = [point(i), point(i+1 mod m)] as a dyadic 1/2^k.
  Dyadic cell_length(int i) const;

  bool operator==(const DyadicPartition&) const = default;
  std::strong_ordering operator<=>(const DyadicPartition& o) const;

  // Comma-separated points: "0,1/2,3/4".
  std::string to_string() const;
  static DyadicPartition parse(const std::string& text);

 private:
  std::vector<Dyadic> points_;
};

enum class DiscModel { Poincare, Klein };

// SVG renderings (self-contained documents, byte-deterministic).
std::string svg_rational_halfplane(const std::vector<RationalArc>& arcs);
std::string svg_rational_disc(const std::vector<RationalArc>& arcs,
                              DiscModel model);
std::string svg_dyadic_disc(const std::vector<std::pair<Dyadic, Dyadic>>& arcs,
                            DiscModel model);

// JSON documents listing the arcs.
std::string arcs_json(const std::vector<RationalArc>& arcs, int max_den,
                      const Rational& lo, const Rational& hi);
std::string arcs_json(const std::vector<std::pair<Dyadic, Dyadic>>& arcs,
                      int depth);

}  // namespace hedra
