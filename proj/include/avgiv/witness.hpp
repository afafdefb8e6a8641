#pragma once

#include "avgiv/alphabet.hpp"
#include "avgiv/engine.hpp"
#include "avgiv/ivset.hpp"

#include <optional>

namespace avgiv {

/// An eventually-constant sequence whose consecutive averages straddle pi
/// between steps `step` and `step + 1`:
///   increasing: below = avg_step < pi < avg_{step+1} = above
///   decreasing: above = avg_step > pi > avg_{step+1} = below
struct SkipCertificate {
  SequenceSpec spec;
  Int step;
  ExactReal below;
  ExactReal above;
  Direction direction = Direction::increasing;
};

/// Builds a verified certificate that pi can be skipped, or nullopt when pi
/// belongs to the characterized unskippable family. Requires
/// a_1 < pi < a_r (std::domain_error otherwise). Every returned certificate
/// has already passed verify_certificate.
std::optional<SkipCertificate> build_skip_witness(const Alphabet& alphabet, const ExactReal& pi,
                                                  Direction direction);

/// Recomputes the two bracketing averages from the certificate's sequence
/// and checks the strict straddle around pi, exactly.
bool verify_certificate(const SkipCertificate& certificate, const ExactReal& pi);

}  // namespace avgiv
