#include "patwords/pattern.hpp"

#include <algorithm>
#include <set>

#include "patwords/errors.hpp"

namespace patwords {

namespace {

void validate_blocks(const std::vector<std::vector<int>>& blocks) {
  if (blocks.empty()) throw EmptyInputError("pattern has no letters");
  int max_letter = 0;
  std::set<int> used;
  for (const auto& block : blocks) {
    if (block.empty()) throw BadCharacterError("empty block in pattern");
    for (int letter : block) {
      if (letter < 1 || letter > 9)
        throw BadCharacterError("pattern letters must lie in 1..9");
      used.insert(letter);
      max_letter = std::max(max_letter, letter);
    }
  }
  if (static_cast<int>(used.size()) != max_letter)
    throw LetterGapError("pattern letters must cover {1..l} with no gaps");
}

}  // namespace

GeneralizedPattern::GeneralizedPattern(std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks)) {
  validate_blocks(blocks_);
  for (const auto& block : blocks_) {
    for (int letter : block) {
      letters_.push_back(letter);
      alphabet_size_ = std::max(alphabet_size_, letter);
    }
  }
  length_ = static_cast<int>(letters_.size());
}

GeneralizedPattern GeneralizedPattern::parse(std::string_view text) {
  if (text.empty()) throw EmptyInputError("empty pattern string");
  std::vector<std::vector<int>> blocks;
  std::vector<int> current;
  bool expect_letter = true;
  for (char ch : text) {
    if (ch >= '1' && ch <= '9') {
      current.push_back(ch - '0');
      expect_letter = false;
    } else if (ch == '-') {
      if (expect_letter)
        throw BadCharacterError("hyphen must sit between two letters");
      blocks.push_back(std::move(current));
      current.clear();
      expect_letter = true;
    } else {
      throw BadCharacterError(std::string("unexpected character '") + ch +
                              "' in pattern");
    }
  }
  if (expect_letter)
    throw BadCharacterError("pattern must not end with a hyphen");
  blocks.push_back(std::move(current));
  return GeneralizedPattern(std::move(blocks));
}

std::string GeneralizedPattern::str() const {
  std::string out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b > 0) out += '-';
    for (int letter : blocks_[b]) out += static_cast<char>('0' + letter);
  }
  return out;
}

GeneralizedPattern GeneralizedPattern::reversed() const {
  std::vector<std::vector<int>> rev(blocks_.rbegin(), blocks_.rend());
  for (auto& block : rev) std::reverse(block.begin(), block.end());
  return GeneralizedPattern(std::move(rev));
}

GeneralizedPattern GeneralizedPattern::complemented() const {
  std::vector<std::vector<int>> comp = blocks_;
  for (auto& block : comp)
    for (int& letter : block) letter = alphabet_size_ + 1 - letter;
  return GeneralizedPattern(std::move(comp));
}

bool SymmetryClass::contains(const GeneralizedPattern& p) const {
  return std::find(members.begin(), members.end(), p) != members.end();
}

SymmetryClass symmetry_class(const GeneralizedPattern& pattern) {
  std::vector<GeneralizedPattern> members{pattern, pattern.reversed(),
                                          pattern.complemented(),
                                          pattern.reversed().complemented()};
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return SymmetryClass{std::move(members)};
}

Word::Word(std::vector<int> l, int k) : letters(std::move(l)), alphabet_size(k) {
  for (int letter : letters) {
    if (letter < 1 || letter > alphabet_size)
      throw DomainError("word letter outside {1..k}");
  }
}

Word Word::reversed() const {
  Word out = *this;
  std::reverse(out.letters.begin(), out.letters.end());
  return out;
}

Word Word::complemented() const {
  Word out = *this;
  for (int& letter : out.letters) letter = alphabet_size + 1 - letter;
  return out;
}

std::string Word::str() const {
  std::string out;
  for (int letter : letters) {
    if (!out.empty()) out += ',';
    out += std::to_string(letter);
  }
  return out;
}

std::vector<GeneralizedPattern> enumerate_patterns(int length) {
  std::vector<GeneralizedPattern> out;
  if (length <= 0) return out;
  // Letter strings over {1..l} for every l <= length, all values used.
  std::vector<int> letters(length, 1);
  for (;;) {
    int max_letter = *std::max_element(letters.begin(), letters.end());
    std::set<int> used(letters.begin(), letters.end());
    if (static_cast<int>(used.size()) == max_letter) {
      // Every subset of the length-1 gaps may carry a hyphen.
      for (unsigned mask = 0; mask < (1u << (length - 1)); ++mask) {
        std::vector<std::vector<int>> blocks;
        std::vector<int> block{letters[0]};
        for (int i = 1; i < length; ++i) {
          if (mask & (1u << (i - 1))) {
            blocks.push_back(block);
            block.clear();
          }
          block.push_back(letters[i]);
        }
        blocks.push_back(block);
        out.emplace_back(std::move(blocks));
      }
    }
    int pos = length - 1;
    while (pos >= 0 && letters[pos] == length) letters[pos--] = 1;
    if (pos < 0) break;
    ++letters[pos];
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace patwords
