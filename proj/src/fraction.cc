#include "circ3/fraction.hh"

#include "circ3/error.hh"

#include <boost/integer/common_factor_rt.hpp>

namespace circ3 {

Fraction::Fraction(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_ == 0) throw InputError("zero denominator");
  normalize();
}

void Fraction::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Fraction& Fraction::operator+=(const Fraction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Fraction& Fraction::operator-=(const Fraction& o) {
  if (den_ == o.den_) {
    num_ -= o.num_;
  } else {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Fraction& Fraction::operator*=(const Fraction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Fraction& Fraction::operator/=(const Fraction& o) {
  if (o.num_ == 0) throw InputError("division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
  if (a.den_ == b.den_) return a.num_.compare(b.num_) <=> 0;
  const Fraction::Int lhs = a.num_ * b.den_;
  const Fraction::Int rhs = b.num_ * a.den_;
  return lhs.compare(rhs) <=> 0;
}

Fraction::Int Fraction::floor() const {
  Int q = num_ / den_;  // truncates toward zero
  if (num_ < 0 && q * den_ != num_) q -= 1;
  return q;
}

std::string Fraction::to_string() const { return num_.str() + "/" + den_.str(); }

Fraction Fraction::parse(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view n = text.substr(0, slash);
  std::string_view d = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(n) || !is_int(d)) throw InputError("malformed fraction '" + std::string(text) + "'");
  if (n.front() == '+') n.remove_prefix(1);
  if (d.front() == '+') d.remove_prefix(1);
  Int num{std::string(n)}, den{std::string(d)};
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Fraction(num, den);
}

Fraction wrap(const Fraction& x, const Fraction& period) {
  Fraction q = x / period;
  return x - period * Fraction(q.floor(), 1);
}

Fraction circ_dist(const Fraction& a, const Fraction& b) {
  Fraction d = abs(a - b);
  Fraction other = Fraction(1) - d;
  return other < d ? other : d;
}

}  // namespace circ3
