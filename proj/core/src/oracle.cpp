#include "patwords/oracle.hpp"

#include <limits>
#include <thread>
#include <vector>

#include "patwords/errors.hpp"
#include "patwords/matcher.hpp"

namespace patwords {

namespace {

// k^n if it fits the budget test, otherwise nullopt.
std::optional<std::uint64_t> state_count(int n, int k,
                                         std::uint64_t max_states) {
  if (n == 0) return 1;  // the empty word, even for k = 0
  if (k == 0) return 0;
  std::uint64_t states = 1;
  for (int i = 0; i < n; ++i) {
    if (states > max_states / static_cast<std::uint64_t>(k)) return std::nullopt;
    states *= static_cast<std::uint64_t>(k);
  }
  return states;
}

// Visit every word of [k]^n with the given first letter fixed (0 fixes
// nothing, i.e. n == 0).  Lexicographic odometer order.
template <typename Fn>
void scan_words(int n, int k, int first_letter, Fn&& visit) {
  Word word(std::vector<int>(static_cast<std::size_t>(n), 1), k);
  if (n == 0) {
    visit(word);
    return;
  }
  word.letters[0] = first_letter;
  for (;;) {
    visit(word);
    int pos = n - 1;
    while (pos >= 1 && word.letters[pos] == k) word.letters[pos--] = 1;
    if (pos < 1) break;  // first letter stays fixed: that is the shard
    ++word.letters[pos];
  }
}

struct ShardResult {
  std::uint64_t avoiders = 0;
  std::map<int, std::uint64_t> occ_histogram;
};

// One pass over the whole cell, sharded by first letter when asked to.
// `want_histogram` selects occurrence counting over early-exit avoidance.
ShardResult scan_cell(const GeneralizedPattern& pattern, int n, int k,
                      int workers, bool want_histogram) {
  const auto scan_shard = [&](int first_letter, ShardResult& out) {
    scan_words(n, k, first_letter, [&](const Word& word) {
      if (want_histogram) {
        const std::uint64_t r = detail::count_occurrences(
            word, pattern, std::numeric_limits<std::uint64_t>::max());
        ++out.occ_histogram[static_cast<int>(r)];
      } else if (detail::count_occurrences(word, pattern, 1) == 0) {
        ++out.avoiders;
      }
    });
  };

  if (n == 0) {
    ShardResult only;
    scan_shard(0, only);
    return only;
  }
  if (k == 0) return {};

  std::vector<ShardResult> per_letter(static_cast<std::size_t>(k));
  const int pool = std::max(1, std::min(workers, k));
  if (pool == 1) {
    for (int letter = 1; letter <= k; ++letter)
      scan_shard(letter, per_letter[static_cast<std::size_t>(letter - 1)]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(pool));
    for (int t = 0; t < pool; ++t) {
      threads.emplace_back([&, t] {
        for (int letter = 1 + t; letter <= k; letter += pool)
          scan_shard(letter, per_letter[static_cast<std::size_t>(letter - 1)]);
      });
    }
    for (auto& thread : threads) thread.join();
  }

  // Combine in letter order; addition is associative so the result is
  // identical to the single-threaded scan.
  ShardResult total;
  for (const ShardResult& shard : per_letter) {
    total.avoiders += shard.avoiders;
    for (const auto& [r, count] : shard.occ_histogram)
      total.occ_histogram[r] += count;
  }
  return total;
}

std::uint64_t checked_states(int n, int k, const EnumerationBudget& budget) {
  const auto states = state_count(n, k, budget.max_states);
  if (!states)
    throw BudgetExceededError("k^n exceeds enumeration budget at n=" +
                              std::to_string(n) + ", k=" + std::to_string(k));
  return *states;
}

}  // namespace

Int brute_count(const GeneralizedPattern& pattern, int n, int k,
                const EnumerationBudget& budget) {
  if (n < 0 || k < 0) throw DomainError("brute_count needs n, k >= 0");
  checked_states(n, k, budget);
  return Int(scan_cell(pattern, n, k, budget.workers, false).avoiders);
}

QPolynomial brute_occpoly(const GeneralizedPattern& pattern, int n, int k,
                          const EnumerationBudget& budget) {
  if (n < 0 || k < 0) throw DomainError("brute_occpoly needs n, k >= 0");
  checked_states(n, k, budget);
  const ShardResult result = scan_cell(pattern, n, k, budget.workers, true);
  QPolynomial poly;
  for (const auto& [r, count] : result.occ_histogram)
    poly.set_coefficient(r, Int(count));
  return poly;
}

CountTable brute_table(const GeneralizedPattern& pattern, int n_max, int k_max,
                       const EnumerationBudget& budget) {
  if (n_max < 0 || k_max < 0) throw DomainError("brute_table needs bounds >= 0");
  CountTable table;
  table.source = "oracle";
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= k_max; ++k) {
      if (!state_count(n, k, budget.max_states)) continue;  // recorded absent
      table.entries[{n, k}] =
          Int(scan_cell(pattern, n, k, budget.workers, false).avoiders);
    }
  }
  return table;
}

}  // namespace patwords
