#include "hedra/dyadic.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "hedra/errors.hpp"

namespace hedra {

namespace {

using Wide = __int128;

constexpr int kMaxExp = 62;

// num * 2^shift as a wide integer; callers guarantee shift <= 124 overall by
// the kMaxExp bound on both operands.
Wide shifted(std::int64_t num, int shift) {
  if (num == 0) return 0;
  return Wide(num) << shift;
}

Dyadic from_wide(Wide num, int exp) {
  if (num == 0) return Dyadic();
  while ((num & 1) == 0) {
    num >>= 1;
    --exp;
  }
  if (num > INT64_MAX || num < INT64_MIN)
    throw capacity_error("dyadic numerator overflow");
  if (exp > kMaxExp || exp < -kMaxExp)
    throw capacity_error("dyadic exponent out of range");
  Dyadic d(static_cast<std::int64_t>(num), 0);
  return d.times_pow2(-exp);  // num odd: times_pow2 only adjusts exponent
}

}  // namespace

Dyadic::Dyadic(std::int64_t num, int exp) {
  if (num == 0) return;
  Wide n = num;
  while ((n & 1) == 0) {
    n >>= 1;
    --exp;
  }
  if (exp > kMaxExp || exp < -kMaxExp)
    throw capacity_error("dyadic exponent out of range");
  num_ = static_cast<std::int64_t>(n);
  exp_ = exp;
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
  int e = exp_ > o.exp_ ? exp_ : o.exp_;
  Wide sum = shifted(num_, e - exp_) + shifted(o.num_, e - o.exp_);
  return from_wide(sum, e);
}

Dyadic Dyadic::operator-(const Dyadic& o) const { return *this + (-o); }

Dyadic Dyadic::operator-() const {
  Dyadic d;
  d.num_ = -num_;  // canonical numerators are odd or zero, never INT64_MIN
  d.exp_ = exp_;
  return d;
}

Dyadic Dyadic::times_pow2(int e) const {
  if (num_ == 0) return Dyadic();
  long long ex = static_cast<long long>(exp_) - e;
  if (ex > kMaxExp || ex < -kMaxExp)
    throw capacity_error("dyadic exponent out of range");
  Dyadic d;
  d.num_ = num_;
  d.exp_ = static_cast<int>(ex);
  return d;
}

Dyadic Dyadic::operator*(const Dyadic& o) const {
  if (num_ == 0 || o.num_ == 0) return Dyadic();
  Wide prod = Wide(num_) * o.num_;
  long long ex = static_cast<long long>(exp_) + o.exp_;
  if (prod > INT64_MAX || prod < INT64_MIN)
    throw capacity_error("dyadic numerator overflow");
  if (ex > kMaxExp || ex < -kMaxExp)
    throw capacity_error("dyadic exponent out of range");
  Dyadic d;
  d.num_ = static_cast<std::int64_t>(prod);
  d.exp_ = static_cast<int>(ex);
  return d;
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& o) const {
  int e = exp_ > o.exp_ ? exp_ : o.exp_;
  Wide lhs = shifted(num_, e - exp_);
  Wide rhs = shifted(o.num_, e - o.exp_);
  return lhs < rhs    ? std::strong_ordering::less
         : lhs == rhs ? std::strong_ordering::equal
                      : std::strong_ordering::greater;
}

Dyadic Dyadic::mod1() const {
  std::int64_t fl;
  if (exp_ <= 0) return Dyadic();  // integer value
  fl = num_ >> exp_;               // arithmetic shift = floor division
  return *this - integer(fl);
}

double Dyadic::to_double() const { return std::ldexp(double(num_), -exp_); }

Rational Dyadic::to_rational() const {
  if (exp_ <= 0) {
    Wide v = shifted(num_, -exp_);
    if (v > INT64_MAX || v < INT64_MIN)
      throw capacity_error("dyadic numerator overflow");
    return Rational(static_cast<std::int64_t>(v), 1);
  }
  return Rational(num_, std::int64_t(1) << exp_);
}

std::string Dyadic::to_string() const {
  Rational r = to_rational();
  return r.to_string();
}

Dyadic Dyadic::parse(const std::string& text) {
  Rational r = Rational::parse(text);
  if (r.is_infinity()) throw std::invalid_argument("dyadic cannot be infinite");
  std::uint64_t den = static_cast<std::uint64_t>(r.den());
  if (!std::has_single_bit(den))
    throw std::invalid_argument("denominator of " + text +
                                " is not a power of two");
  return Dyadic(r.num(), std::bit_width(den) - 1);
}

}  // namespace hedra
