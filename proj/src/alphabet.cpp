#include "avgiv/alphabet.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace avgiv {

Alphabet::Alphabet(std::vector<ExactReal> values) : values_(std::move(values)) {
  if (values_.size() < 2)
    throw std::domain_error("alphabet needs at least two letters; the open interval "
                            "(a_1, a_r) is empty otherwise");
  const Int* rad = nullptr;
  for (const ExactReal& v : values_) {
    if (v.is_rational()) continue;
    if (rad == nullptr) {
      rad = &v.radicand();
    } else if (*rad != v.radicand()) {
      throw std::domain_error("alphabet letters mix radicands sqrt(" + rad->str() +
                              ") and sqrt(" + v.radicand().str() + ")");
    }
  }
  for (std::size_t i = 0; i + 1 < values_.size(); ++i) {
    const int c = compare(values_[i], values_[i + 1]);
    if (c == 0)
      throw std::domain_error("duplicate alphabet letter " + to_string(values_[i]) +
                              "; deduplicate the input");
    if (c > 0)
      throw std::domain_error("alphabet letters out of order at " + to_string(values_[i + 1]) +
                              "; sort the input increasingly");
  }
}

Alphabet negated(const Alphabet& alphabet) {
  std::vector<ExactReal> values;
  values.reserve(alphabet.size());
  for (auto it = alphabet.letters().rbegin(); it != alphabet.letters().rend(); ++it)
    values.push_back(-*it);
  return Alphabet(std::move(values));
}

Normalized normalize(const Alphabet& alphabet) {
  Normalized result;
  result.map = AffineMap{alphabet.lowest(), alphabet.highest() - alphabet.lowest()};
  result.interior.reserve(alphabet.size() - 2);
  for (std::size_t i = 1; i + 1 < alphabet.size(); ++i)
    result.interior.push_back(result.map.invert(alphabet[i]));
  return result;
}

RationalityClass classify(std::span<const ExactReal> interior) {
  AllRational all;
  all.denominator_lcm = 1;
  all.fractions.reserve(interior.size());
  for (std::size_t i = 0; i < interior.size(); ++i) {
    if (!interior[i].is_rational()) return HasIrrational{i};
    const Rational& f = interior[i].rational_part();
    all.fractions.push_back(f);
    all.denominator_lcm = lcm(all.denominator_lcm, denominator(f));
  }
  return all;
}

}  // namespace avgiv
