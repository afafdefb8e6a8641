#pragma once

#include "avgiv/exact.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace avgiv {

/// Eventually-constant sequence: the prefix terms, then `tail` repeated
/// forever. The shape of every witness this library produces.
struct SequenceSpec {
  std::vector<ExactReal> prefix;
  ExactReal tail;
};

/// avg_step < pi < avg_{step+1}, both recorded exactly.
struct SkipStep {
  Int step;
  ExactReal below;
  ExactReal above;
};

/// avg_step = pi.
struct HitStep {
  Int step;
};

/// No average ever equals pi, and no consecutive pair straddles it upward.
struct NoCross {};

using CrossEvent = std::variant<SkipStep, HitStep, NoCross>;

/// First `horizon` consecutive averages of the sequence, exact.
std::vector<ExactReal> averages(const SequenceSpec& spec, std::uint64_t horizon);

/// The n-th consecutive average (n >= 1) in closed form.
ExactReal average_at(const SequenceSpec& spec, const Int& n);

/// First event along the whole infinite sequence: equality (HitStep) or an
/// upward straddle (SkipStep), whichever comes first in index order. Decided
/// exactly: the prefix is scanned, the constant-tail regime is solved in
/// closed form, never iterated.
CrossEvent first_upcross(const SequenceSpec& spec, const ExactReal& pi);

/// First n (1-based) with avgs[n-1] < pi < avgs[n]; nullopt if none.
std::optional<std::size_t> detect_skip(std::span<const ExactReal> avgs, const ExactReal& pi);

}  // namespace avgiv
