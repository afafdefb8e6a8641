#include "avgiv/witness.hpp"

#include <stdexcept>
#include <utility>

namespace avgiv {

namespace {

constexpr std::size_t kMaxPrefixTerms = std::size_t(1) << 24;

SkipCertificate certify(SequenceSpec spec, const ExactReal& pi) {
  CrossEvent event = first_upcross(spec, pi);
  const SkipStep* skip = std::get_if<SkipStep>(&event);
  if (skip == nullptr)
    throw std::logic_error("witness construction failed to skip pi = " + to_string(pi));
  return SkipCertificate{std::move(spec), skip->step, skip->below, skip->above,
                         Direction::increasing};
}

SkipCertificate build_increasing(const Alphabet& alphabet, const ExactReal& pi,
                                 const std::optional<Int>& k_plus_1, const Normalized& norm) {
  // Anything off the k/(k+1) grid is skipped by a_1, a_r, a_r, ...
  if (!k_plus_1) return certify({{alphabet.lowest()}, alphabet.highest()}, pi);

  // pi sits on the grid but is not a member: some interior letter can carry
  // the skip. Prefer the smallest rational one whose denominator does not
  // divide k+1; fall back to an irrational letter.
  std::optional<std::size_t> rational_pick;
  std::optional<std::size_t> irrational_pick;
  for (std::size_t i = 0; i < norm.interior.size(); ++i) {
    if (norm.interior[i].is_rational()) {
      if (*k_plus_1 % denominator(norm.interior[i].rational_part()) != 0) {
        rational_pick = i;
        break;
      }
    } else if (!irrational_pick) {
      irrational_pick = i;
    }
  }
  const std::optional<std::size_t> pick = rational_pick ? rational_pick : irrational_pick;
  if (!pick)
    throw std::logic_error("no interior letter available although pi is not a member");
  const ExactReal& letter = alphabet[*pick + 1];

  const int side = compare(pi, letter);
  if (side == 0) throw std::logic_error("selected interior letter equals pi");
  if (side > 0) {
    // pi above the letter: letter, a_r, a_r, ... rises past pi without
    // landing on it.
    return certify({{letter}, alphabet.highest()}, pi);
  }

  // pi below the letter: a_1, letter, letter, ... approaches the letter.
  SequenceSpec approach{{alphabet.lowest()}, letter};
  CrossEvent event = first_upcross(approach, pi);
  if (const SkipStep* skip = std::get_if<SkipStep>(&event))
    return SkipCertificate{std::move(approach), skip->step, skip->below, skip->above,
                           Direction::increasing};

  // The approach lands exactly on pi at step n; flipping the n-th term to
  // a_r turns the landing into a straddle between steps n-1 and n.
  const HitStep& hit = std::get<HitStep>(event);
  if (hit.step > kMaxPrefixTerms)
    throw std::runtime_error("witness prefix would need " + hit.step.str() + " terms");
  const std::size_t n = hit.step.convert_to<std::size_t>();
  SequenceSpec patched;
  patched.prefix.reserve(n - 1);
  patched.prefix.push_back(alphabet.lowest());
  for (std::size_t i = 0; i + 2 < n; ++i) patched.prefix.push_back(letter);
  patched.tail = alphabet.highest();
  return certify(std::move(patched), pi);
}

}  // namespace

std::optional<SkipCertificate> build_skip_witness(const Alphabet& alphabet, const ExactReal& pi,
                                                  Direction direction) {
  if (!(alphabet.lowest() < pi && pi < alphabet.highest()))
    throw std::domain_error("pi = " + to_string(pi) + " is outside the open interval (" +
                            to_string(alphabet.lowest()) + ", " + to_string(alphabet.highest()) +
                            ")");

  if (direction == Direction::decreasing) {
    // Negate everything, skip upward, negate back.
    std::optional<SkipCertificate> reflected =
        build_skip_witness(negated(alphabet), -pi, Direction::increasing);
    if (!reflected) return std::nullopt;
    SkipCertificate cert;
    cert.spec.prefix.reserve(reflected->spec.prefix.size());
    for (const ExactReal& x : reflected->spec.prefix) cert.spec.prefix.push_back(-x);
    cert.spec.tail = -reflected->spec.tail;
    cert.step = reflected->step;
    cert.below = -reflected->above;
    cert.above = -reflected->below;
    cert.direction = Direction::decreasing;
    if (!verify_certificate(cert, pi))
      throw std::logic_error("reflected certificate failed verification");
    return cert;
  }

  if (membership(alphabet, pi, Direction::increasing).member) return std::nullopt;

  const Normalized norm = normalize(alphabet);
  const ExactReal mu_pi = norm.map.invert(pi);
  std::optional<Int> k_plus_1;
  if (mu_pi.is_rational()) {
    const Rational& f = mu_pi.rational_part();
    if (denominator(f) - numerator(f) == 1) k_plus_1 = denominator(f);
  }

  SkipCertificate cert = build_increasing(alphabet, pi, k_plus_1, norm);
  if (!verify_certificate(cert, pi))
    throw std::logic_error("constructed certificate failed verification");
  return cert;
}

bool verify_certificate(const SkipCertificate& certificate, const ExactReal& pi) {
  if (certificate.step < 1) return false;
  const ExactReal at_step = average_at(certificate.spec, certificate.step);
  const ExactReal at_next = average_at(certificate.spec, certificate.step + 1);
  if (certificate.direction == Direction::increasing) {
    return at_step == certificate.below && at_next == certificate.above &&
           at_step < pi && pi < at_next;
  }
  return at_step == certificate.above && at_next == certificate.below &&
         at_next < pi && pi < at_step;
}

}  // namespace avgiv
