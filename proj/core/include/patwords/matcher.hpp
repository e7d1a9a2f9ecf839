#pragma once

#include <cstdint>

#include "patwords/numeric.hpp"
#include "patwords/pattern.hpp"

namespace patwords {

// Number of index tuples i_1 < ... < i_m in `word` that are
// order-isomorphic to `pattern` (equal pattern letters demand equal word
// letters) and where letters of one block sit at consecutive positions.
Int occurrences(const Word& word, const GeneralizedPattern& pattern);

// True iff occurrences(word, pattern) == 0; stops at the first hit.
bool avoids(const Word& word, const GeneralizedPattern& pattern);

namespace detail {
// Shared kernel: counts occurrences but never beyond `limit`.
// The oracle calls this directly to stay in machine integers.
std::uint64_t count_occurrences(const Word& word,
                                const GeneralizedPattern& pattern,
                                std::uint64_t limit);
}  // namespace detail

}  // namespace patwords
