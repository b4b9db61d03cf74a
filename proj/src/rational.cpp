#include "hedra/rational.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "hedra/errors.hpp"

namespace hedra {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw capacity_error("rational arithmetic overflow");
  return static_cast<std::int64_t>(v);
}

Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

Wide wide_gcd(Wide a, Wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make(Wide num, Wide den) {
  if (den == 0) {
    if (num == 0) throw std::invalid_argument("rational 0/0 is indeterminate");
    return Rational::infinity();
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational(narrow(num), narrow(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) {
    if (num == 0) throw std::invalid_argument("rational 0/0 is indeterminate");
    num_ = 1;
    den_ = 0;
    return;
  }
  Wide n = num, d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Wide g = wide_gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = narrow(n);
  den_ = narrow(d);
}

Rational Rational::operator+(const Rational& o) const {
  if (is_infinity() || o.is_infinity()) {
    if (is_infinity() && o.is_infinity())
      throw std::invalid_argument("infinity + infinity is indeterminate");
    return infinity();
  }
  return make(Wide(num_) * o.den_ + Wide(o.num_) * den_, Wide(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator-() const {
  if (is_infinity()) return infinity();
  Rational r;
  r.num_ = narrow(-Wide(num_));
  r.den_ = den_;
  return r;
}

Rational Rational::operator*(const Rational& o) const {
  if (is_infinity() || o.is_infinity()) {
    if (num_ == 0 || o.num_ == 0)
      throw std::invalid_argument("0 * infinity is indeterminate");
    return infinity();
  }
  return make(Wide(num_) * o.num_, Wide(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (is_infinity() && o.is_infinity())
    throw std::invalid_argument("infinity / infinity is indeterminate");
  if (is_infinity()) return infinity();
  if (o.is_infinity()) return Rational(0, 1);
  if (o.num_ == 0) {
    if (num_ == 0) throw std::invalid_argument("0 / 0 is indeterminate");
    return infinity();
  }
  return make(Wide(num_) * o.den_, Wide(den_) * o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  if (is_infinity() || o.is_infinity()) {
    if (is_infinity() && o.is_infinity()) return std::strong_ordering::equal;
    return is_infinity() ? std::strong_ordering::greater
                         : std::strong_ordering::less;
  }
  Wide lhs = Wide(num_) * o.den_;
  Wide rhs = Wide(o.num_) * den_;
  return lhs < rhs    ? std::strong_ordering::less
         : lhs == rhs ? std::strong_ordering::equal
                      : std::strong_ordering::greater;
}

std::string Rational::to_string() const {
  if (is_infinity()) return "inf";
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  std::size_t b = text.find_first_not_of(" \t");
  std::size_t e = text.find_last_not_of(" \t");
  if (b == std::string::npos) throw std::invalid_argument("empty rational");
  std::string s = text.substr(b, e - b + 1);
  if (s == "inf") return infinity();
  auto parse_int = [](const std::string& part) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad rational: " + part);
    }
    if (used != part.size()) throw std::invalid_argument("bad rational: " + part);
    return v;
  };
  std::size_t slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s), 1);
  std::int64_t num = parse_int(s.substr(0, slash));
  std::int64_t den = parse_int(s.substr(slash + 1));
  if (den < 0) throw std::invalid_argument("bad rational: " + s);
  return Rational(num, den);
}

bool is_farey_neighbor(const Rational& a, const Rational& b) {
  Wide det = Wide(a.num()) * b.den() - Wide(b.num()) * a.den();
  return wide_abs(det) == 1;
}

Rational mediant(const Rational& a, const Rational& b) {
  if (!is_farey_neighbor(a, b))
    throw std::invalid_argument("mediant requires Farey neighbors: " +
                                a.to_string() + ", " + b.to_string());
  return make(Wide(a.num()) + b.num(), Wide(a.den()) + b.den());
}

}  // namespace hedra
