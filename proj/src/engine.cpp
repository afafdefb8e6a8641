#include "avgiv/engine.hpp"

#include <stdexcept>
#include <utility>

namespace avgiv {

namespace {

ExactReal prefix_sum(const SequenceSpec& spec, std::size_t n) {
  ExactReal sum;
  for (std::size_t i = 0; i < n; ++i) sum += spec.prefix[i];
  return sum;
}

// avg_m for m in the constant-tail regime (m >= prefix length).
ExactReal tail_average(const ExactReal& total, const ExactReal& tail, const Int& len,
                       const Int& m) {
  return (total + ExactReal(m - len) * tail) / ExactReal(m);
}

}  // namespace

std::vector<ExactReal> averages(const SequenceSpec& spec, std::uint64_t horizon) {
  std::vector<ExactReal> result;
  result.reserve(horizon);
  ExactReal sum;
  for (std::uint64_t n = 1; n <= horizon; ++n) {
    sum += n <= spec.prefix.size() ? spec.prefix[n - 1] : spec.tail;
    result.push_back(sum / ExactReal(Int(n)));
  }
  return result;
}

ExactReal average_at(const SequenceSpec& spec, const Int& n) {
  if (n < 1) throw std::domain_error("average index must be >= 1");
  const Int len = spec.prefix.size();
  if (n <= len) return prefix_sum(spec, n.convert_to<std::size_t>()) / ExactReal(n);
  return tail_average(prefix_sum(spec, spec.prefix.size()), spec.tail, len, n);
}

CrossEvent first_upcross(const SequenceSpec& spec, const ExactReal& pi) {
  const std::size_t len = spec.prefix.size();

  // Prefix scan on (sum, n) pairs; avg_n vs pi is sum vs n*pi.
  ExactReal sum;
  ExactReal prev_sum;
  int prev_cmp = 0;
  for (std::size_t n = 1; n <= len; ++n) {
    prev_sum = sum;
    sum += spec.prefix[n - 1];
    const int cmp = compare(sum, ExactReal(Int(n)) * pi);
    if (cmp == 0) return HitStep{Int(n)};
    if (cmp > 0 && n >= 2 && prev_cmp < 0)
      return SkipStep{Int(n - 1), prev_sum / ExactReal(Int(n - 1)), sum / ExactReal(Int(n))};
    prev_cmp = cmp;
  }

  const ExactReal& c = spec.tail;
  if (len == 0) {
    // Constant sequence: every average equals c.
    if (compare(c, pi) == 0) return HitStep{1};
    return NoCross{};
  }

  const Int length(len);
  // Tail averages move monotonically toward c and never cross it.
  const int toward = compare(sum, ExactReal(length) * c);  // avg_len vs c
  const int pi_vs_c = compare(pi, c);

  if (toward < 0 && pi_vs_c < 0 && prev_cmp < 0) {
    // Rising through pi: smallest m with avg_m >= pi solves
    // sum + (m - len)*c >= m*pi.
    const ExactReal threshold = (ExactReal(length) * c - sum) / (c - pi);
    const Int m = ceil_exact(threshold);
    const ExactReal at_m = tail_average(sum, c, length, m);
    if (compare(at_m, pi) == 0) return HitStep{m};
    return SkipStep{m - 1, tail_average(sum, c, length, m - 1), at_m};
  }

  if (toward > 0 && pi_vs_c > 0 && prev_cmp > 0) {
    // Falling through pi: only an exact equality counts as an event here;
    // a downward straddle is not an upcross.
    const ExactReal solution = (sum - ExactReal(length) * c) / (pi - c);
    if (solution.is_rational() && denominator(solution.rational_part()) == 1) {
      Int m = numerator(solution.rational_part());
      if (m > length) return HitStep{std::move(m)};
    }
    return NoCross{};
  }

  return NoCross{};
}

std::optional<std::size_t> detect_skip(std::span<const ExactReal> avgs, const ExactReal& pi) {
  for (std::size_t i = 0; i + 1 < avgs.size(); ++i)
    if (avgs[i] < pi && pi < avgs[i + 1]) return i + 1;
  return std::nullopt;
}

}  // namespace avgiv
