#pragma once

#include <map>
#include <string>

#include "patwords/errors.hpp"
#include "patwords/numeric.hpp"

namespace patwords {

// Polynomial in the occurrence-marking variable q with exact integer
// coefficients; exponent r carries the number of words with exactly r
// occurrences.  Zero coefficients are never stored.
class QPolynomial {
 public:
  QPolynomial() = default;
  QPolynomial(const Int& constant) {  // NOLINT: implicit on purpose
    if (constant != 0) coeffs_[0] = constant;
  }
  QPolynomial(long constant) : QPolynomial(Int(constant)) {}
  QPolynomial(int constant) : QPolynomial(Int(constant)) {}

  static QPolynomial variable() {
    QPolynomial p;
    p.coeffs_[1] = 1;
    return p;
  }

  const std::map<int, Int>& coefficients() const { return coeffs_; }

  Int coefficient(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Int(0) : it->second;
  }

  void set_coefficient(int exponent, const Int& value) {
    if (value == 0)
      coeffs_.erase(exponent);
    else
      coeffs_[exponent] = value;
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

  bool is_constant() const {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
  }

  Int evaluate(const Int& q) const {
    Int total = 0;
    for (const auto& [exponent, value] : coeffs_)
      total += value * pow_int(q, static_cast<unsigned long>(exponent));
    return total;
  }

  // Word totals: coefficient sum, i.e. evaluate(1).
  Int sum() const {
    Int total = 0;
    for (const auto& [exponent, value] : coeffs_) total += value;
    return total;
  }

  // evaluate(0) with the 0^0 = 1 convention: just the constant term.
  Int at_zero() const { return coefficient(0); }

  QPolynomial& operator+=(const QPolynomial& other) {
    for (const auto& [exponent, value] : other.coeffs_) {
      Int merged = coefficient(exponent) + value;
      set_coefficient(exponent, merged);
    }
    return *this;
  }
  QPolynomial& operator-=(const QPolynomial& other) {
    for (const auto& [exponent, value] : other.coeffs_) {
      Int merged = coefficient(exponent) - value;
      set_coefficient(exponent, merged);
    }
    return *this;
  }
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) {
    a += b;
    return a;
  }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) {
    a -= b;
    return a;
  }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    QPolynomial product;
    for (const auto& [ea, va] : a.coeffs_)
      for (const auto& [eb, vb] : b.coeffs_) {
        Int merged = product.coefficient(ea + eb) + va * vb;
        product.set_coefficient(ea + eb, merged);
      }
    return product;
  }
  QPolynomial& operator*=(const QPolynomial& other) {
    *this = *this * other;
    return *this;
  }
  // Exact division by a constant; only constants that divide every
  // coefficient are legal (series expansion with unit leading term).
  friend QPolynomial operator/(const QPolynomial& a, const QPolynomial& b);

  bool operator==(const QPolynomial& other) const {
    return coeffs_ == other.coeffs_;
  }
  bool operator!=(const QPolynomial& other) const { return !(*this == other); }

  // "2 + 2q + q^2"; zero polynomial prints "0".
  std::string str() const;

 private:
  std::map<int, Int> coeffs_;
};

inline QPolynomial operator/(const QPolynomial& a, const QPolynomial& b) {
  if (b.is_zero()) throw ZeroDenominatorError("division by zero q-polynomial");
  if (!b.is_constant())
    throw DomainError("q-polynomial division only by constants");
  const Int divisor = b.coefficient(0);
  QPolynomial quotient;
  for (const auto& [exponent, value] : a.coeffs_) {
    if (value % divisor != 0)
      throw DomainError("q-polynomial coefficient not divisible");
    quotient.set_coefficient(exponent, value / divisor);
  }
  return quotient;
}

inline std::string QPolynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [exponent, value] : coeffs_) {
    if (!out.empty()) out += value < 0 ? " - " : " + ";
    else if (value < 0) out += "-";
    const Int magnitude = abs(value);
    const bool show_value = magnitude != 1 || exponent == 0;
    if (show_value) out += magnitude.str();
    if (exponent >= 1) {
      out += "q";
      if (exponent >= 2) out += "^" + std::to_string(exponent);
    }
  }
  return out;
}

}  // namespace patwords
