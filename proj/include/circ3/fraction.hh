#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>

namespace circ3 {

/// Exact rational number in canonical form: gcd(|num|, den) = 1, den >= 1.
///
/// Backed by arbitrary-precision integers so that denominators produced by
/// perturbation and interval midpoints never overflow.
class Fraction {
 public:
  using Int = boost::multiprecision::cpp_int;

  Fraction() : num_(0), den_(1) {}
  Fraction(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design of numeric literals
  Fraction(Int n, Int d);

  const Int& numerator() const { return num_; }
  const Int& denominator() const { return den_; }

  Fraction& operator+=(const Fraction& o);
  Fraction& operator-=(const Fraction& o);
  Fraction& operator*=(const Fraction& o);
  Fraction& operator/=(const Fraction& o);

  friend Fraction operator+(Fraction a, const Fraction& b) { return a += b; }
  friend Fraction operator-(Fraction a, const Fraction& b) { return a -= b; }
  friend Fraction operator*(Fraction a, const Fraction& b) { return a *= b; }
  friend Fraction operator/(Fraction a, const Fraction& b) { return a /= b; }
  friend Fraction operator-(Fraction a) {
    a.num_ = -a.num_;
    return a;
  }

  friend bool operator==(const Fraction& a, const Fraction& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

  // Largest integer <= value.
  Int floor() const;

  // "num/den", always with an explicit denominator.
  std::string to_string() const;
  // Accepts "n/d" or a plain integer "n". Throws InputError on bad text.
  static Fraction parse(std::string_view text);

 private:
  void normalize();

  Int num_;
  Int den_;
};

// x reduced into [0, period).
Fraction wrap(const Fraction& x, const Fraction& period = Fraction(1));

// Circular distance on the unit-circumference circle: min(|a-b|, 1-|a-b|)
// for a, b in [0,1).
Fraction circ_dist(const Fraction& a, const Fraction& b);

inline Fraction abs(const Fraction& x) { return x < Fraction(0) ? -x : x; }

}  // namespace circ3
