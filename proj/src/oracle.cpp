#include "avgiv/oracle.hpp"

#include "avgiv/ivset.hpp"
#include "avgiv/witness.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>

namespace avgiv {

namespace {

// All sums achievable with exactly n letters, deduplicated: sums strictly
// increasing, one representative count vector per sum (row-major, r wide).
// Dedup is what keeps the sweep polynomial: an average depends on the counts
// only through their sum.
struct Frontier {
  std::vector<ExactReal> sums;
  std::vector<std::uint64_t> counts;
  std::size_t width = 0;

  std::size_t size() const { return sums.size(); }
  const std::uint64_t* row(std::size_t i) const { return counts.data() + i * width; }
};

bool lex_less(const std::uint64_t* a, const std::uint64_t* b, std::size_t width) {
  return std::lexicographical_compare(a, a + width, b, b + width);
}

// One sweep step: append each letter to each node, merge the per-letter runs
// (each stays sorted under a constant shift), keep the lexicographically
// smallest counts among equal sums.
Frontier expand(const Frontier& cur, const std::vector<ExactReal>& letters, bool parallel) {
  const std::size_t k = letters.size();
  const std::size_t m = cur.size();
  std::vector<ExactReal> shifted(k * m);

  const std::ptrdiff_t total = static_cast<std::ptrdiff_t>(k * m);
#pragma omp parallel for schedule(static) if (parallel)
  for (std::ptrdiff_t idx = 0; idx < total; ++idx) {
    const std::size_t i = static_cast<std::size_t>(idx) / m;
    const std::size_t j = static_cast<std::size_t>(idx) % m;
    shifted[idx] = cur.sums[j] + letters[i];
  }

  Frontier next;
  next.width = cur.width;
  next.sums.reserve(m + k);
  next.counts.reserve((m + k) * cur.width);

  std::vector<std::size_t> head(k, 0);
  std::vector<std::uint64_t> candidate(cur.width);
  while (true) {
    // Smallest head across the k runs.
    std::size_t best = k;
    for (std::size_t i = 0; i < k; ++i) {
      if (head[i] == m) continue;
      if (best == k || shifted[i * m + head[i]] < shifted[best * m + head[best]]) best = i;
    }
    if (best == k) break;
    const ExactReal& value = shifted[best * m + head[best]];

    bool have_candidate = false;
    for (std::size_t i = best; i < k; ++i) {
      if (head[i] == m || shifted[i * m + head[i]] != value) continue;
      const std::uint64_t* parent = cur.row(head[i]);
      if (!have_candidate) {
        std::copy(parent, parent + cur.width, candidate.begin());
        ++candidate[i];
        have_candidate = true;
      } else {
        std::vector<std::uint64_t> other(parent, parent + cur.width);
        ++other[i];
        if (lex_less(other.data(), candidate.data(), cur.width)) candidate = std::move(other);
      }
      ++head[i];
    }
    next.sums.push_back(value);
    next.counts.insert(next.counts.end(), candidate.begin(), candidate.end());
  }
  return next;
}

// Smallest achievable sum strictly inside (exclusive_low, exclusive_high).
std::optional<std::size_t> find_in_open_interval(const Frontier& frontier,
                                                 const ExactReal& exclusive_low,
                                                 const ExactReal& exclusive_high) {
  const auto it =
      std::upper_bound(frontier.sums.begin(), frontier.sums.end(), exclusive_low);
  if (it == frontier.sums.end() || !(*it < exclusive_high)) return std::nullopt;
  return static_cast<std::size_t>(it - frontier.sums.begin());
}

}  // namespace

std::optional<CountWitness> search_skip(const Alphabet& alphabet, const ExactReal& pi,
                                        const SearchOptions& options) {
  if (!(alphabet.lowest() < pi && pi < alphabet.highest()))
    throw std::domain_error("pi = " + to_string(pi) + " is outside the open interval (" +
                            to_string(alphabet.lowest()) + ", " + to_string(alphabet.highest()) +
                            ")");

  const std::vector<ExactReal>& letters = alphabet.letters();
  const bool parallel = options.policy == ExecPolicy::parallel;

  Frontier frontier;
  frontier.width = letters.size();
  frontier.sums.emplace_back();
  frontier.counts.assign(letters.size(), 0);

  for (std::uint64_t n = 1; n <= options.max_n; ++n) {
    frontier = expand(frontier, letters, parallel);
    // A straddle needs sum/n < pi < (sum + a)/(n+1) for the appended letter
    // a, i.e. sum in ((n+1)pi - a, n*pi). The a_r interval contains every
    // other letter's, so checking more letters cannot find more.
    const ExactReal upper = ExactReal(Int(n)) * pi;
    const ExactReal next_weight = ExactReal(Int(n + 1)) * pi;
    std::optional<std::size_t> found =
        find_in_open_interval(frontier, next_weight - alphabet.highest(), upper);
    if (options.try_all_letters && !found) {
      for (const ExactReal& letter : letters) {
        found = find_in_open_interval(frontier, next_weight - letter, upper);
        if (found) break;
      }
    }
    if (found) {
      CountWitness witness;
      witness.counts.assign(frontier.row(*found), frontier.row(*found) + frontier.width);
      witness.n = n;
      witness.sum = frontier.sums[*found];
      return witness;
    }
  }
  return std::nullopt;
}

std::optional<CountWitness> search_skip(const Alphabet& alphabet, const ExactReal& pi,
                                        std::uint64_t max_n) {
  SearchOptions options;
  options.max_n = max_n;
  return search_skip(alphabet, pi, options);
}

ConsistencyReport consistency_report(const Alphabet& alphabet, std::uint64_t max_n,
                                     std::uint64_t family_count, std::span<const ExactReal> grid,
                                     ExecPolicy policy) {
  const IvCharacterization characterization = characterize(alphabet, Direction::increasing);
  const std::vector<ExactReal> family =
      enumerate(characterization, static_cast<std::size_t>(family_count));

  SearchOptions nested;
  nested.max_n = max_n;
  nested.policy = ExecPolicy::serial;  // outer loops own the parallelism

  const std::ptrdiff_t family_size = static_cast<std::ptrdiff_t>(family.size());
  const std::ptrdiff_t grid_size = static_cast<std::ptrdiff_t>(grid.size());
  std::vector<std::string> faults(family.size() + grid.size());
  const bool parallel = policy == ExecPolicy::parallel;

#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::ptrdiff_t i = 0; i < family_size; ++i) {
    try {
      const ExactReal& element = family[i];
      if (auto witness = search_skip(alphabet, element, nested))
        faults[i] = "family element " + to_string(element) + " skipped by count witness at n = " +
                    std::to_string(witness->n);
    } catch (const std::exception& e) {
      faults[i] = std::string("family element check failed: ") + e.what();
    }
  }

#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::ptrdiff_t i = 0; i < grid_size; ++i) {
    std::string& fault = faults[family.size() + i];
    try {
      const ExactReal& pi = grid[i];
      const bool member = membership(alphabet, pi, Direction::increasing).member;
      const auto counted = search_skip(alphabet, pi, nested);
      const auto certificate = build_skip_witness(alphabet, pi, Direction::increasing);
      if (member) {
        if (counted)
          fault = "member " + to_string(pi) + " skipped by count witness at n = " +
                  std::to_string(counted->n);
        else if (certificate)
          fault = "member " + to_string(pi) + " skipped by constructed certificate";
      } else {
        if (!counted)
          fault = "non-member " + to_string(pi) + " has no count witness within n <= " +
                  std::to_string(max_n);
        else if (!certificate)
          fault = "non-member " + to_string(pi) + " reported not skippable by the builder";
        else if (!verify_certificate(*certificate, pi))
          fault = "certificate for " + to_string(pi) + " failed verification";
      }
    } catch (const std::exception& e) {
      fault = std::string("grid check failed: ") + e.what();
    }
  }

  ConsistencyReport report;
  report.family_checked = family.size();
  report.grid_checked = grid.size();
  for (std::string& fault : faults)
    if (!fault.empty()) report.violations.push_back(std::move(fault));
  return report;
}

}  // namespace avgiv
