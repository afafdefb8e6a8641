#pragma once

#include "avgiv/exact.hpp"

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

namespace avgiv {

/// Strictly increasing letters a_1 < ... < a_r, r >= 2, all in one field.
class Alphabet {
public:
  /// Validates order, size and field; throws std::domain_error otherwise.
  explicit Alphabet(std::vector<ExactReal> values);

  std::size_t size() const { return values_.size(); }
  const ExactReal& operator[](std::size_t i) const { return values_[i]; }
  const ExactReal& lowest() const { return values_.front(); }
  const ExactReal& highest() const { return values_.back(); }
  const std::vector<ExactReal>& letters() const { return values_; }

private:
  std::vector<ExactReal> values_;
};

/// Letters negated and reversed: a_i -> -a_{r+1-i}. Still a valid alphabet.
Alphabet negated(const Alphabet& alphabet);

/// x -> offset + scale*x with scale > 0; maps [0,1] onto [a_1, a_r].
struct AffineMap {
  ExactReal offset;
  ExactReal scale;

  ExactReal apply(const ExactReal& x) const { return offset + scale * x; }
  ExactReal invert(const ExactReal& y) const { return (y - offset) / scale; }
};

/// Interior letters rescaled to (0,1): mu_i = (a_i - a_1)/(a_r - a_1).
struct Normalized {
  std::vector<ExactReal> interior;  // length r-2, strictly increasing
  AffineMap map;
};

Normalized normalize(const Alphabet& alphabet);

/// All interior values rational, as reduced fractions, with the lcm of their
/// denominators (1 for the empty list).
struct AllRational {
  std::vector<Rational> fractions;
  Int denominator_lcm;
};

/// At least one interior value irrational; index of the first one.
struct HasIrrational {
  std::size_t index;
};

using RationalityClass = std::variant<AllRational, HasIrrational>;

RationalityClass classify(std::span<const ExactReal> interior);

}  // namespace avgiv
