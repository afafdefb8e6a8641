#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>

namespace avgiv {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Reduced fraction with positive denominator; zero is 0/1.
/// Throws std::domain_error when den == 0.
Rational make_rational(Int num, Int den);

Int floor_rational(const Rational& q);
Int ceil_rational(const Rational& q);
int sgn(const Rational& q);

/// A value rat + coef*sqrt(rad) in the real quadratic field Q(sqrt(rad)).
///
/// Canonical form: rad is square-free and >= 2 whenever coef != 0; rational
/// values always carry coef == 0 and rad == 0. Canonicality makes equality
/// fieldwise. All arithmetic is exact; operands must share one field (equal
/// radicands, or at least one side rational), anything else throws
/// std::domain_error.
class ExactReal {
public:
  ExactReal() = default;
  ExactReal(int value) : rat_(value) {}
  ExactReal(Int value) : rat_(std::move(value)) {}
  ExactReal(Rational value) : rat_(std::move(value)) {}
  /// Canonicalizing constructor: square factors of rad move into coef,
  /// rad in {0,1} collapses into the rational part. Throws on rad < 0.
  ExactReal(Rational rat, Rational coef, Int rad);

  const Rational& rational_part() const { return rat_; }
  const Rational& root_coefficient() const { return coef_; }
  const Int& radicand() const { return rad_; }

  bool is_rational() const { return coef_.is_zero(); }
  bool is_zero() const { return coef_.is_zero() && rat_.is_zero(); }
  /// Exact sign of the real value: -1, 0, +1.
  int sign() const;

  ExactReal operator-() const;
  friend ExactReal operator+(const ExactReal& x, const ExactReal& y);
  friend ExactReal operator-(const ExactReal& x, const ExactReal& y);
  friend ExactReal operator*(const ExactReal& x, const ExactReal& y);
  friend ExactReal operator/(const ExactReal& x, const ExactReal& y);
  ExactReal& operator+=(const ExactReal& y) { return *this = *this + y; }
  ExactReal& operator-=(const ExactReal& y) { return *this = *this - y; }
  ExactReal& operator*=(const ExactReal& y) { return *this = *this * y; }
  ExactReal& operator/=(const ExactReal& y) { return *this = *this / y; }

  friend bool operator==(const ExactReal& x, const ExactReal& y) {
    return x.rat_ == y.rat_ && x.coef_ == y.coef_ && x.rad_ == y.rad_;
  }
  friend bool operator!=(const ExactReal& x, const ExactReal& y) { return !(x == y); }

  /// Floating approximation through a 100-digit intermediate. A guard for
  /// tests and display, never a substitute for exact comparison.
  double to_double() const;

private:
  struct canonical_tag {};
  ExactReal(Rational rat, Rational coef, const Int& rad, canonical_tag);

  Rational rat_{};
  Rational coef_{};
  Int rad_{};
};

/// Exact three-way comparison: -1, 0, +1. Throws std::domain_error when the
/// operands carry two distinct non-zero radicands.
int compare(const ExactReal& x, const ExactReal& y);

inline bool operator<(const ExactReal& x, const ExactReal& y) { return compare(x, y) < 0; }
inline bool operator>(const ExactReal& x, const ExactReal& y) { return compare(x, y) > 0; }
inline bool operator<=(const ExactReal& x, const ExactReal& y) { return compare(x, y) <= 0; }
inline bool operator>=(const ExactReal& x, const ExactReal& y) { return compare(x, y) >= 0; }

Int floor_exact(const ExactReal& x);
Int ceil_exact(const ExactReal& x);

/// Canonical textual form, reparseable by parse_number (textio.hpp).
std::string to_string(const ExactReal& x);
std::ostream& operator<<(std::ostream& os, const ExactReal& x);

}  // namespace avgiv
