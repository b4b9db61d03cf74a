#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "hedra/rational.hpp"

namespace hedra {

// Exact dyadic rational num / 2^exp in canonical form: num odd, or
// (num, exp) == (0, 0).  exp may be negative, so integers and halves alike are
// representable; |exp| and the shifted numerators are range-checked and throw
// capacity_error on overflow.
class Dyadic {
 public:
  constexpr Dyadic() = default;
  // Value num / 2^exp (normalized on construction).
  Dyadic(std::int64_t num, int exp);
  static Dyadic integer(std::int64_t n) { return Dyadic(n, 0); }
  static Dyadic zero() { return Dyadic(); }
  static Dyadic one() { return Dyadic(1, 0); }
  static Dyadic half() { return Dyadic(1, 1); }

  std::int64_t num() const { return num_; }
  int exp() const { return exp_; }

  Dyadic operator+(const Dyadic& o) const;
  Dyadic operator-(const Dyadic& o) const;
  Dyadic operator-() const;
  // Multiplication by 2^e.
  Dyadic times_pow2(int e) const;
  Dyadic operator*(const Dyadic& o) const;

  bool operator==(const Dyadic& o) const = default;
  std::strong_ordering operator<=>(const Dyadic& o) const;

  bool is_integer() const { return exp_ <= 0; }
  // Reduction into [0, 1): value minus its floor.
  Dyadic mod1() const;
  // For a value j/2^k in canonical form: the subdivision depth max(k, 0);
  // 0 and all integers have depth 0, 1/2 depth 1, 1/4 and 3/4 depth 2, ...
  int depth() const { return exp_ > 0 ? exp_ : 0; }

  double to_double() const;
  Rational to_rational() const;

  // Plain fraction text: "3/4", "0", "5/8"; integers without denominator.
  std::string to_string() const;
  // Accepts "p/q" with q a power of two, or an integer "p".
  static Dyadic parse(const std::string& text);

 private:
  std::int64_t num_ = 0;
  int exp_ = 0;
};

}  // namespace hedra
