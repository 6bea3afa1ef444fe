#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hdx {

/// Exact reduced fraction num/den with den > 0. Overflow of the 64-bit
/// representation raises InvariantBreach.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

using BigRational = boost::multiprecision::cpp_rational;

/// Closed interval [lo, hi] with exact rational endpoints that is guaranteed
/// to contain a real quantity. Irrational inputs (roots) are enclosed on a
/// 10^-10 grid and the enclosure is verified exactly, so every width stays
/// below 10^-9 for the magnitudes used here.
class Enclosure {
 public:
  Enclosure() = default;
  explicit Enclosure(const BigRational& exact) : lo_(exact), hi_(exact) {}
  Enclosure(BigRational lo, BigRational hi);

  static Enclosure exact(std::int64_t num, std::int64_t den = 1);
  /// Encloses x^(1/n) for rational x >= 0.
  static Enclosure root(const BigRational& x, unsigned n);
  static Enclosure sqrt(const BigRational& x) { return root(x, 2); }

  const BigRational& lo() const noexcept { return lo_; }
  const BigRational& hi() const noexcept { return hi_; }
  double lo_double() const { return lo_.convert_to<double>(); }
  double hi_double() const { return hi_.convert_to<double>(); }
  BigRational width() const { return hi_ - lo_; }
  bool contains(const BigRational& x) const { return lo_ <= x && x <= hi_; }

  friend Enclosure operator+(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator-(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator*(const Enclosure& a, const Enclosure& b);
  /// Requires 0 not in b.
  friend Enclosure operator/(const Enclosure& a, const Enclosure& b);

 private:
  BigRational lo_{0};
  BigRational hi_{0};
};

std::string to_string(const BigRational& q);

}  // namespace hdx
