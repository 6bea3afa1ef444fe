#include "hdx/rational.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hdx/error.hpp"

namespace hdx {

namespace {

using i128 = __int128;

BigRational power(const BigRational& x, unsigned n) {
  BigRational r(1);
  for (unsigned i = 0; i < n; ++i) r *= x;
  return r;
}

Rational make_checked(i128 num, i128 den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 a = num < 0 ? -num : num;
  i128 b = den;
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  constexpr i128 kMax = static_cast<i128>(INT64_MAX);
  if (num > kMax || num < -kMax || den > kMax) throw InvariantBreach("rational overflow");
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g > 1 ? num / g : num;
  den_ = g > 1 ? den / g : den;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return make_checked(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                      static_cast<i128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return make_checked(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
                      static_cast<i128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return make_checked(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw InvalidArgument("division by zero rational");
  return make_checked(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
  const i128 lhs = static_cast<i128>(a.num_) * b.den_;
  const i128 rhs = static_cast<i128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------

Enclosure::Enclosure(BigRational lo, BigRational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw InvalidArgument("enclosure with hi < lo");
}

Enclosure Enclosure::exact(std::int64_t num, std::int64_t den) {
  return Enclosure(BigRational(num) / BigRational(den));
}

Enclosure Enclosure::root(const BigRational& x, unsigned n) {
  if (n == 0) throw InvalidArgument("zeroth root");
  if (x < 0) throw InvalidArgument("root of a negative number");
  if (x == 0 || n == 1) return Enclosure(x);
  if (n == 2) {
    const auto num = boost::multiprecision::numerator(x);
    const auto den = boost::multiprecision::denominator(x);
    const auto rn = boost::multiprecision::sqrt(num);
    const auto rd = boost::multiprecision::sqrt(den);
    if (rn * rn == num && rd * rd == den) return Enclosure(BigRational(rn, rd));
  }
  const long double approx = std::pow(x.convert_to<long double>(), 1.0L / static_cast<long double>(n));
  const boost::multiprecision::cpp_int grid("10000000000");
  const BigRational step(boost::multiprecision::cpp_int(1), grid);
  const long double scaled = approx * 1e10L;
  BigRational lo(boost::multiprecision::cpp_int(static_cast<std::int64_t>(std::floor(scaled))), grid);
  BigRational hi(boost::multiprecision::cpp_int(static_cast<std::int64_t>(std::ceil(scaled))), grid);
  lo -= step;
  hi += step;
  if (lo < 0) lo = 0;
  // Widen until the enclosure is exactly certified.
  for (int guard = 0; guard < 64; ++guard) {
    bool ok = true;
    if (power(lo, n) > x) {
      lo -= step;
      if (lo < 0) lo = 0;
      ok = false;
    }
    if (power(hi, n) < x) {
      hi += step;
      ok = false;
    }
    if (ok) return Enclosure(lo, hi);
  }
  throw InvariantBreach("could not certify root enclosure");
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) { return {a.lo_ + b.lo_, a.hi_ + b.hi_}; }

Enclosure operator-(const Enclosure& a, const Enclosure& b) { return {a.lo_ - b.hi_, a.hi_ - b.lo_}; }

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
  const BigRational p[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
  if (b.lo_ <= 0 && b.hi_ >= 0) throw InvalidArgument("enclosure division by an interval containing 0");
  const Enclosure inv(BigRational(1) / b.hi_, BigRational(1) / b.lo_);
  return a * inv;
}

std::string to_string(const BigRational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace hdx
