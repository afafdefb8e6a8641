#include "avgiv/exact.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace avgiv {

namespace {

using BigFloat = boost::multiprecision::cpp_bin_float_100;

BigFloat to_big_float(const ExactReal& x) {
  BigFloat value(x.rational_part());
  if (!x.is_rational())
    value += BigFloat(x.root_coefficient()) * sqrt(BigFloat(x.radicand()));
  return value;
}

// rad of the field both operands live in; 0 means purely rational.
const Int& common_radicand(const ExactReal& x, const ExactReal& y) {
  if (x.radicand() == y.radicand()) return x.radicand();
  if (x.radicand() == 0) return y.radicand();
  if (y.radicand() == 0) return x.radicand();
  throw std::domain_error("operands lie in different quadratic fields: sqrt(" +
                          x.radicand().str() + ") vs sqrt(" + y.radicand().str() + ")");
}

}  // namespace

Rational make_rational(Int num, Int den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

Int floor_rational(const Rational& q) {
  Int n = numerator(q);
  const Int& d = denominator(q);
  Int quot = n / d;
  if (n % d != 0 && n < 0) --quot;
  return quot;
}

Int ceil_rational(const Rational& q) { return -floor_rational(-q); }

int sgn(const Rational& q) { return q.sign(); }

ExactReal::ExactReal(Rational rat, Rational coef, Int rad)
    : rat_(std::move(rat)), coef_(std::move(coef)), rad_(std::move(rad)) {
  if (rad_ < 0) throw std::domain_error("negative radicand");
  if (coef_.is_zero() || rad_.is_zero()) {
    coef_ = 0;
    rad_ = 0;
    return;
  }
  // Extract square factors: c*sqrt(m^2 * d) -> (c*m)*sqrt(d).
  Int root = sqrt(rad_);
  if (root * root == rad_) {
    rat_ += coef_ * Rational(root);
    coef_ = 0;
    rad_ = 0;
    return;
  }
  Int mult = 1;
  for (Int f = 2; f * f <= rad_; ++f) {
    const Int ff = f * f;
    while (rad_ % ff == 0) {
      rad_ /= ff;
      mult *= f;
    }
  }
  if (mult > 1) coef_ *= Rational(mult);
  if (rad_ == 1) {  // rad was a perfect square times 1
    rat_ += coef_;
    coef_ = 0;
    rad_ = 0;
  }
}

ExactReal::ExactReal(Rational rat, Rational coef, const Int& rad, canonical_tag)
    : rat_(std::move(rat)), coef_(std::move(coef)) {
  if (!coef_.is_zero()) rad_ = rad;
}

int ExactReal::sign() const {
  const int sr = rat_.sign();
  const int sc = coef_.sign();
  if (sc == 0) return sr;
  if (sr == 0) return sc;
  if (sr == sc) return sr;
  // Opposite signs: |rat| vs |coef|*sqrt(rad), decided on squares.
  const Rational lhs = rat_ * rat_;
  const Rational rhs = coef_ * coef_ * Rational(rad_);
  if (lhs == rhs)
    throw std::logic_error("square-free radicand admitted a rational square root");
  return lhs > rhs ? sr : sc;
}

ExactReal ExactReal::operator-() const {
  return ExactReal(-rat_, -coef_, rad_, canonical_tag{});
}

ExactReal operator+(const ExactReal& x, const ExactReal& y) {
  const Int& rad = common_radicand(x, y);
  return ExactReal(x.rat_ + y.rat_, x.coef_ + y.coef_, rad, ExactReal::canonical_tag{});
}

ExactReal operator-(const ExactReal& x, const ExactReal& y) {
  const Int& rad = common_radicand(x, y);
  return ExactReal(x.rat_ - y.rat_, x.coef_ - y.coef_, rad, ExactReal::canonical_tag{});
}

ExactReal operator*(const ExactReal& x, const ExactReal& y) {
  const Int& rad = common_radicand(x, y);
  Rational rat = x.rat_ * y.rat_;
  if (!x.coef_.is_zero() && !y.coef_.is_zero()) rat += x.coef_ * y.coef_ * Rational(rad);
  Rational coef = x.rat_ * y.coef_ + x.coef_ * y.rat_;
  return ExactReal(std::move(rat), std::move(coef), rad, ExactReal::canonical_tag{});
}

ExactReal operator/(const ExactReal& x, const ExactReal& y) {
  if (y.is_zero()) throw std::domain_error("division by zero");
  const Int& rad = common_radicand(x, y);
  if (y.is_rational()) {
    return ExactReal(x.rat_ / y.rat_, x.coef_ / y.rat_, rad, ExactReal::canonical_tag{});
  }
  // Rationalize with the conjugate: (a+b*sqrt(d))^-1 = (a-b*sqrt(d))/(a^2-b^2*d).
  const Rational denom = y.rat_ * y.rat_ - y.coef_ * y.coef_ * Rational(rad);
  Rational rat = (x.rat_ * y.rat_ - x.coef_ * y.coef_ * Rational(rad)) / denom;
  Rational coef = (x.coef_ * y.rat_ - x.rat_ * y.coef_) / denom;
  return ExactReal(std::move(rat), std::move(coef), rad, ExactReal::canonical_tag{});
}

double ExactReal::to_double() const { return to_big_float(*this).convert_to<double>(); }

int compare(const ExactReal& x, const ExactReal& y) { return (x - y).sign(); }

Int floor_exact(const ExactReal& x) {
  if (x.is_rational()) return floor_rational(x.rational_part());
  // 100-digit estimate, then exact correction; the loops move at most a step
  // or two unless the estimate is badly off, and remain correct regardless.
  BigFloat est = floor(to_big_float(x));
  Int k = est.convert_to<Int>();
  while (ExactReal(k + 1) <= x) ++k;
  while (ExactReal(k) > x) --k;
  return k;
}

Int ceil_exact(const ExactReal& x) { return -floor_exact(-x); }

namespace {

std::string rational_text(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

}  // namespace

std::string to_string(const ExactReal& x) {
  if (x.is_rational()) return rational_text(x.rational_part());
  const Rational& c = x.root_coefficient();
  const std::string root = "sqrt(" + x.radicand().str() + ")";
  std::string term;
  if (c == 1)
    term = root;
  else if (c == -1)
    term = "-1*" + root;
  else
    term = rational_text(c) + "*" + root;
  if (x.rational_part().is_zero()) return term;
  if (c.sign() > 0) return rational_text(x.rational_part()) + "+" + term;
  // negative coefficient: print "rat-|c|*sqrt(d)"
  const Rational abs_c = -c;
  std::string tail = abs_c == 1 ? root : rational_text(abs_c) + "*" + root;
  return rational_text(x.rational_part()) + "-" + tail;
}

std::ostream& operator<<(std::ostream& os, const ExactReal& x) {
  return os << to_string(x);
}

}  // namespace avgiv
