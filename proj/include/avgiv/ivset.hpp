#pragma once

#include "avgiv/alphabet.hpp"
#include "avgiv/exact.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace avgiv {

enum class Direction { increasing, decreasing };

/// No value in (a_1, a_r) is safe from being skipped.
struct Empty {};

/// One-parameter family of unskippable values:
///   increasing: (1/(Mt))*a_1 + (1 - 1/(Mt))*a_r, t = 1, 2, 3, ...
///   decreasing: (1 - 1/(Mt))*a_1 + (1/(Mt))*a_r, t = 1, 2, 3, ...
/// Elements are only meaningful inside the open interval (a_1, a_r); for
/// M = 1 the t = 1 element lands on an endpoint and is filtered out.
struct Family {
  Int multiple;  // M = lcm of the reduced interior denominators (1 when r = 2)
  ExactReal lowest;
  ExactReal highest;
  Direction direction = Direction::increasing;
};

using IvCharacterization = std::variant<Empty, Family>;

inline bool is_empty(const IvCharacterization& c) {
  return std::holds_alternative<Empty>(c);
}

/// Closed form for the unskippable values of `alphabet` in the chosen
/// direction. Empty exactly when some interior normalized letter is
/// irrational; the decreasing case is derived by reflecting the alphabet
/// through negation.
IvCharacterization characterize(const Alphabet& alphabet, Direction direction);

/// The t-th family element (t >= 1), whether or not it lies inside the open
/// interval. Throws std::domain_error for t < 1.
ExactReal family_element(const Family& family, const Int& t);

/// First `count` elements strictly inside (a_1, a_r), in t order.
std::vector<ExactReal> enumerate(const IvCharacterization& characterization, std::size_t count);

struct MemberResult {
  bool member = false;
  std::optional<Int> t;  // family index, present iff member
};

/// Exact membership of pi in the characterized set. Requires
/// a_1 < pi < a_r, else std::domain_error.
MemberResult membership(const Alphabet& alphabet, const ExactReal& pi, Direction direction);

}  // namespace avgiv
