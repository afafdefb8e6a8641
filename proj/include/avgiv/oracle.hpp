#pragma once

#include "avgiv/alphabet.hpp"
#include "avgiv/exact.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace avgiv {

/// Letter multiplicities proving a skip: with n = sum of counts and
/// sum = weighted letter sum, sum/n < pi < (sum + a_r)/(n + 1) holds exactly.
struct CountWitness {
  std::vector<std::uint64_t> counts;  // one entry per alphabet letter
  std::uint64_t n = 0;
  ExactReal sum;
};

enum class ExecPolicy { serial, parallel };

struct SearchOptions {
  std::uint64_t max_n = 100;
  /// Also test every letter as the appended (n+1)-th term, not just a_r.
  /// Exists to spot-check that the maximal letter suffices; the result set
  /// cannot grow, since the a_r interval contains every other letter's.
  bool try_all_letters = false;
  ExecPolicy policy = ExecPolicy::parallel;
};

/// Exhaustive skip search over letter counts: scans n = 1..max_n through the
/// deduplicated set of achievable sums (a subset-sum style sweep) and returns
/// the first witness, smallest n first, then smallest sum. Absence up to
/// max_n is evidence of unskippability, not proof. Requires a_1 < pi < a_r.
///
/// The serial and parallel policies run the same sweep and return identical
/// witnesses; the parallel one distributes the per-step sum expansion across
/// OpenMP threads.
std::optional<CountWitness> search_skip(const Alphabet& alphabet, const ExactReal& pi,
                                        const SearchOptions& options);
std::optional<CountWitness> search_skip(const Alphabet& alphabet, const ExactReal& pi,
                                        std::uint64_t max_n);

/// Cross-check of the closed-form characterization against the brute-force
/// search and the witness builder, over the first `family_count` family
/// elements and a caller-supplied grid of candidate values.
struct ConsistencyReport {
  std::uint64_t family_checked = 0;
  std::uint64_t grid_checked = 0;
  std::vector<std::string> violations;  // empty means fully consistent

  bool consistent() const { return violations.empty(); }
};

ConsistencyReport consistency_report(const Alphabet& alphabet, std::uint64_t max_n,
                                     std::uint64_t family_count, std::span<const ExactReal> grid,
                                     ExecPolicy policy = ExecPolicy::parallel);

}  // namespace avgiv
