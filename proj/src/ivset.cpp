#include "avgiv/ivset.hpp"

#include <stdexcept>
#include <utility>

namespace avgiv {

namespace {

void require_inside(const Alphabet& alphabet, const ExactReal& pi) {
  if (!(alphabet.lowest() < pi && pi < alphabet.highest()))
    throw std::domain_error("pi = " + to_string(pi) + " is outside the open interval (" +
                            to_string(alphabet.lowest()) + ", " + to_string(alphabet.highest()) +
                            ")");
}

}  // namespace

IvCharacterization characterize(const Alphabet& alphabet, Direction direction) {
  if (direction == Direction::decreasing) {
    // Reflect through negation; the set of reduced interior denominators is
    // unchanged, so the family multiple carries over.
    IvCharacterization reflected = characterize(negated(alphabet), Direction::increasing);
    if (is_empty(reflected)) return Empty{};
    return Family{std::get<Family>(reflected).multiple, alphabet.lowest(), alphabet.highest(),
                  Direction::decreasing};
  }
  const Normalized norm = normalize(alphabet);
  const RationalityClass cls = classify(norm.interior);
  if (std::holds_alternative<HasIrrational>(cls)) return Empty{};
  return Family{std::get<AllRational>(cls).denominator_lcm, alphabet.lowest(), alphabet.highest(),
                Direction::increasing};
}

ExactReal family_element(const Family& family, const Int& t) {
  if (t < 1) throw std::domain_error("family index t must be >= 1");
  const ExactReal share(make_rational(1, family.multiple * t));  // 1/(Mt)
  const ExactReal rest = ExactReal(1) - share;
  if (family.direction == Direction::increasing)
    return share * family.lowest + rest * family.highest;
  return rest * family.lowest + share * family.highest;
}

std::vector<ExactReal> enumerate(const IvCharacterization& characterization, std::size_t count) {
  std::vector<ExactReal> elements;
  if (is_empty(characterization)) return elements;
  const Family& family = std::get<Family>(characterization);
  elements.reserve(count);
  for (Int t = 1; elements.size() < count; ++t) {
    ExactReal value = family_element(family, t);
    if (family.lowest < value && value < family.highest) elements.push_back(std::move(value));
  }
  return elements;
}

MemberResult membership(const Alphabet& alphabet, const ExactReal& pi, Direction direction) {
  require_inside(alphabet, pi);
  const IvCharacterization characterization = characterize(alphabet, direction);
  if (is_empty(characterization)) return {};
  const Family& family = std::get<Family>(characterization);

  // Solve 1/(Mt) = share for t, where share is the pi coordinate measured
  // from the far endpoint of the direction.
  const ExactReal span = alphabet.highest() - alphabet.lowest();
  const ExactReal share = direction == Direction::increasing
                              ? (alphabet.highest() - pi) / span
                              : (pi - alphabet.lowest()) / span;
  if (!share.is_rational()) return {};
  const Rational t_exact = Rational(1) / (share.rational_part() * Rational(family.multiple));
  if (denominator(t_exact) != 1 || t_exact < 1) return {};
  Int t = numerator(t_exact);
  if (family_element(family, t) != pi)
    throw std::logic_error("membership solve disagreed with the family formula");
  return {true, std::move(t)};
}

}  // namespace avgiv
