#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace hedra {

// Exact rational p/q in lowest terms with q >= 0.  q == 0 encodes the single
// point at infinity (normalized to 1/0), which compares greater than every
// finite rational.  All arithmetic is overflow-checked and throws
// capacity_error when a result would not fit in 64 bits.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den);
  static Rational infinity() { return Rational(kInfTag{}); }
  static Rational integer(std::int64_t n) { return Rational(n, 1); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_infinity() const { return den_ == 0; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational operator-() const;

  bool operator==(const Rational& o) const = default;
  std::strong_ordering operator<=>(const Rational& o) const;

  // "p/q", or "p" when q == 1, or "inf".
  std::string to_string() const;
  // Accepts "p/q", "p", and "inf" (surrounding spaces allowed).
  static Rational parse(const std::string& text);

 private:
  struct kInfTag {};
  explicit Rational(kInfTag) : num_(1), den_(0) {}

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Farey neighbors: |p1*q2 - p2*q1| == 1 (infinity 1/0 is a neighbor of every
// integer).  Both arguments must be distinct; infinity/infinity is false.
bool is_farey_neighbor(const Rational& a, const Rational& b);

// Mediant (p1+p2)/(q1+q2) of two Farey neighbors; throws std::invalid_argument
// if they are not neighbors.
Rational mediant(const Rational& a, const Rational& b);

}  // namespace hedra
