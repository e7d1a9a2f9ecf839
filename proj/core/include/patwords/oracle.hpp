#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "patwords/numeric.hpp"
#include "patwords/pattern.hpp"
#include "patwords/qpolynomial.hpp"

namespace patwords {

// Cap on exhaustive enumeration.  k^n beyond max_states raises
// BudgetExceededError; workers > 1 fans the scan out over first-letter
// shards (aggregation is plain addition, so scheduling cannot change the
// answer).
struct EnumerationBudget {
  std::uint64_t max_states = 10'000'000;
  int workers = 1;
};

// Exact avoidance and occurrence counts over (n, k) cells, formula- or
// oracle-sourced.  Cells skipped for budget are simply absent.
struct CountTable {
  std::map<std::pair<int, int>, Int> entries;  // (n, k) -> count
  std::string source;

  std::optional<Int> at(int n, int k) const {
    auto it = entries.find({n, k});
    if (it == entries.end()) return std::nullopt;
    return it->second;
  }
};

// |[k]^n(pattern)| by scanning every word.  Deliberately naive: this is
// the ground truth the formula evaluators are judged against.
Int brute_count(const GeneralizedPattern& pattern, int n, int k,
                const EnumerationBudget& budget = {});

// Occurrence polynomial of (n, k): coefficient of q^r counts words with
// exactly r occurrences.  Coefficients sum to k^n.
QPolynomial brute_occpoly(const GeneralizedPattern& pattern, int n, int k,
                          const EnumerationBudget& budget = {});

// Counts for the whole grid 0 <= n <= n_max, 0 <= k <= k_max; cells over
// budget are left absent rather than failing the call.
CountTable brute_table(const GeneralizedPattern& pattern, int n_max, int k_max,
                       const EnumerationBudget& budget = {});

}  // namespace patwords
