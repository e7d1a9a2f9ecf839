#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace patwords {

// A generalized multipermutation pattern: blocks of letters over {1..l},
// every value in {1..l} used at least once.  Letters inside a block must
// match adjacent word positions; a hyphen between blocks lifts that
// constraint.  External string form: digits with '-' between blocks,
// e.g. "13-2", "21-1", "111".
class GeneralizedPattern {
 public:
  // Accepts the grammar  digit (('-')? digit)*  with digits 1..9.
  // Throws EmptyInputError, BadCharacterError, LetterGapError.
  static GeneralizedPattern parse(std::string_view text);

  explicit GeneralizedPattern(std::vector<std::vector<int>> blocks);

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int alphabet_size() const { return alphabet_size_; }  // l
  int length() const { return length_; }                // m, total letters

  // Letters in pattern order, block structure flattened out.
  const std::vector<int>& letters() const { return letters_; }

  std::string str() const;

  // Pattern read right to left, hyphens included.
  GeneralizedPattern reversed() const;

  // Each letter a replaced by l+1-a, hyphens kept in place.
  GeneralizedPattern complemented() const;

  bool single_block() const { return blocks_.size() == 1; }
  bool all_ones() const { return alphabet_size_ == 1; }

  bool operator==(const GeneralizedPattern& other) const {
    return blocks_ == other.blocks_;
  }
  bool operator!=(const GeneralizedPattern& other) const {
    return !(*this == other);
  }
  // Ordered by external string form, so "least" matches what users see.
  bool operator<(const GeneralizedPattern& other) const {
    return str() < other.str();
  }

 private:
  std::vector<std::vector<int>> blocks_;
  std::vector<int> letters_;
  int alphabet_size_ = 0;
  int length_ = 0;
};

// Orbit of a pattern under reversal and complement; 1, 2 or 4 members.
struct SymmetryClass {
  std::vector<GeneralizedPattern> members;  // sorted by string form

  const GeneralizedPattern& canonical() const { return members.front(); }
  bool contains(const GeneralizedPattern& p) const;
};

SymmetryClass symmetry_class(const GeneralizedPattern& pattern);

// A word over the alphabet {1..k}.  Empty words are fine.
struct Word {
  std::vector<int> letters;
  int alphabet_size = 0;  // k

  Word() = default;
  Word(std::vector<int> l, int k);

  std::size_t size() const { return letters.size(); }

  Word reversed() const;
  Word complemented() const;  // a -> k+1-a

  std::string str() const;
};

// Every valid pattern with exactly `length` letters: all strings over
// {1..l} (l <= length) using each value at least once, under every
// hyphenation.  Ordered by string form.
std::vector<GeneralizedPattern> enumerate_patterns(int length);

}  // namespace patwords
