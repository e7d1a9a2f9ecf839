#pragma once

#include <stdexcept>
#include <string>

namespace patwords {

// Common base so callers can catch everything from this library at once.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// "" is not a pattern.
class EmptyInputError : public ParseError {
 public:
  using ParseError::ParseError;
};

// Letters used do not form {1..l}, e.g. "13" skips 2.
class LetterGapError : public ParseError {
 public:
  using ParseError::ParseError;
};

// Anything outside digits 1-9 and well-placed hyphens.
class BadCharacterError : public ParseError {
 public:
  using ParseError::ParseError;
};

// Enumeration would visit more than budget.max_states words.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

// Series division with valuation(numerator) < valuation(denominator).
class ValuationMismatchError : public Error {
 public:
  using Error::Error;
};

class ZeroDenominatorError : public Error {
 public:
  using Error::Error;
};

// Invalid index domain for a combinatorial number.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A counting formula produced a non-integer; the formula does not apply
// at that cell and the caller must fall back to other evidence.
class IntegralityError : public Error {
 public:
  using Error::Error;
};

class UnsupportedPatternError : public Error {
 public:
  using Error::Error;
};

}  // namespace patwords
