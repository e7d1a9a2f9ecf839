#include "patwords/matcher.hpp"

#include <limits>
#include <vector>

namespace patwords {
namespace detail {

namespace {

// Order-isomorphism with equalities over the selected word letters.
bool isomorphic(const std::vector<int>& pattern_letters,
                const std::vector<int>& selected) {
  const std::size_t m = pattern_letters.size();
  for (std::size_t p = 0; p + 1 < m; ++p) {
    for (std::size_t q = p + 1; q < m; ++q) {
      const int dp = pattern_letters[p] - pattern_letters[q];
      const int dw = selected[p] - selected[q];
      if ((dp < 0) != (dw < 0) || (dp == 0) != (dw == 0)) return false;
    }
  }
  return true;
}

struct Scan {
  const std::vector<int>& word;
  const std::vector<std::vector<int>>& blocks;
  const std::vector<int>& pattern_letters;
  const std::vector<int>& suffix_len;  // letters in blocks b..end
  std::uint64_t limit;
  std::uint64_t count = 0;
  std::vector<int> selected;

  // Place block `b` at start position >= `min_start`; recurse.
  void place(std::size_t b, std::size_t min_start) {
    if (count >= limit) return;
    if (b == blocks.size()) {
      if (isomorphic(pattern_letters, selected)) ++count;
      return;
    }
    const std::size_t len = blocks[b].size();
    const std::size_t need_after = suffix_len[b + 1];
    if (word.size() < len + need_after) return;
    const std::size_t last_start = word.size() - len - need_after;
    for (std::size_t s = min_start; s <= last_start; ++s) {
      for (std::size_t i = 0; i < len; ++i)
        selected.push_back(word[s + i]);
      place(b + 1, s + len);
      selected.resize(selected.size() - len);
      if (count >= limit) return;
    }
  }
};

}  // namespace

std::uint64_t count_occurrences(const Word& word,
                                const GeneralizedPattern& pattern,
                                std::uint64_t limit) {
  if (limit == 0) return 0;
  if (word.letters.size() < static_cast<std::size_t>(pattern.length()))
    return 0;
  std::vector<int> suffix_len(pattern.blocks().size() + 1, 0);
  for (std::size_t b = pattern.blocks().size(); b-- > 0;)
    suffix_len[b] =
        suffix_len[b + 1] + static_cast<int>(pattern.blocks()[b].size());
  Scan scan{word.letters, pattern.blocks(), pattern.letters(), suffix_len,
            limit};
  scan.selected.reserve(pattern.length());
  scan.place(0, 0);
  return scan.count;
}

}  // namespace detail

Int occurrences(const Word& word, const GeneralizedPattern& pattern) {
  return Int(detail::count_occurrences(
      word, pattern, std::numeric_limits<std::uint64_t>::max()));
}

bool avoids(const Word& word, const GeneralizedPattern& pattern) {
  return detail::count_occurrences(word, pattern, 1) == 0;
}

}  // namespace patwords
