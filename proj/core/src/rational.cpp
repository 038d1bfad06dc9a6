#include "soficlab/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>

namespace soficlab {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

i64 narrow(i128 v, const char* what) {
  if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
    throw RationalOverflow(std::string("rational overflow in ") + what);
  return static_cast<i64>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(i64 num, i64 den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  i128 n = num, d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = narrow(n, "construction");
  den_ = narrow(d, "construction");
}

Rational operator+(const Rational& a, const Rational& b) {
  i128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
  i128 d = i128(a.den_) * b.den_;
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rational r;
  r.num_ = narrow(n, "addition");
  r.den_ = narrow(d, "addition");
  return r;
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  i128 n = i128(a.num_) * b.num_;
  i128 d = i128(a.den_) * b.den_;
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rational r;
  r.num_ = narrow(n, "multiplication");
  r.den_ = narrow(d, "multiplication");
  return r;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::invalid_argument("rational division by zero");
  i128 n = i128(a.num_) * b.den_;
  i128 d = i128(a.den_) * b.num_;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rational r;
  r.num_ = narrow(n, "division");
  r.den_ = narrow(d, "division");
  return r;
}

bool operator<(const Rational& a, const Rational& b) {
  return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
}

Rational Rational::pow(unsigned k) const {
  Rational acc(1);
  Rational base = *this;
  while (k != 0) {
    if (k & 1u) acc *= base;
    k >>= 1;
    if (k != 0) base *= base;
  }
  return acc;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      std::size_t pos = 0;
      i64 n = std::stoll(text, &pos);
      if (pos != text.size()) throw std::invalid_argument("");
      return Rational(n);
    }
    std::size_t p1 = 0, p2 = 0;
    i64 n = std::stoll(text.substr(0, slash), &p1);
    i64 d = std::stoll(text.substr(slash + 1), &p2);
    if (p1 != slash || p2 != text.size() - slash - 1) throw std::invalid_argument("");
    return Rational(n, d);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("rational out of range: '" + text + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace soficlab
