#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "patwords/errors.hpp"
#include "patwords/numeric.hpp"

namespace patwords {

// Power series in x truncated at a fixed order: coefficients for
// x^0..x^N, exactly N+1 of them.  Arithmetic keeps the smaller order of
// the two operands, so a coefficient is only ever reported when it is
// fully determined.
template <typename R>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : c_(static_cast<std::size_t>(order) + 1) {
    if (order < 0) throw DomainError("series order must be >= 0");
  }

  static TruncatedSeries constant(const R& value, int order) {
    TruncatedSeries s(order);
    s.c_[0] = value;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }

  const R& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  void set(int i, const R& value) { c_[static_cast<std::size_t>(i)] = value; }

  const std::vector<R>& coefficients() const { return c_; }

  // Index of the first nonzero coefficient, if any survives truncation.
  std::optional<int> valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!(c_[i] == R(0))) return static_cast<int>(i);
    return std::nullopt;
  }

  TruncatedSeries truncated(int new_order) const {
    TruncatedSeries out(std::min(new_order, order()));
    for (int i = 0; i <= out.order(); ++i) out.set(i, c_[i]);
    return out;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a,
                                   const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (int i = 0; i <= out.order(); ++i) out.set(i, a[i] + b[i]);
    return out;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a,
                                   const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (int i = 0; i <= out.order(); ++i) out.set(i, a[i] - b[i]);
    return out;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a,
                                   const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (int i = 0; i <= out.order(); ++i) {
      R acc = R(0);
      for (int j = 0; j <= i; ++j) acc = acc + a[j] * b[i - j];
      out.set(i, acc);
    }
    return out;
  }

  bool operator==(const TruncatedSeries& other) const {
    return c_ == other.c_;
  }
  bool operator!=(const TruncatedSeries& other) const {
    return !(*this == other);
  }

 private:
  std::vector<R> c_;
};

// Valuation-aware division.  Both operands are shifted down by
// valuation(b); a must vanish at least as deeply as b.  The quotient is
// shorter than the inputs by that shift:
//   order(a/b) = min(order(a), order(b)) - valuation(b).
template <typename R>
TruncatedSeries<R> series_div(const TruncatedSeries<R>& a,
                              const TruncatedSeries<R>& b) {
  const std::optional<int> vb = b.valuation();
  if (!vb)
    throw ZeroDenominatorError("series divisor is zero to its order");
  const std::optional<int> va = a.valuation();
  if (va && *va < *vb)
    throw ValuationMismatchError(
        "numerator valuation below denominator valuation");
  const int out_order = std::min(a.order(), b.order()) - *vb;
  if (out_order < 0)
    throw ValuationMismatchError("division leaves no determined coefficients");
  TruncatedSeries<R> quotient(out_order);
  if (!va) return quotient;  // 0 / b = 0
  // For n <= out_order every b[i + vb] touched below is inside b's
  // truncation, so the quotient is fully determined.
  const R& lead = b[*vb];
  for (int n = 0; n <= out_order; ++n) {
    R acc = a[n + *vb];
    for (int i = 1; i <= n; ++i) acc = acc - b[i + *vb] * quotient[n - i];
    quotient.set(n, acc / lead);
  }
  return quotient;
}

using Series = TruncatedSeries<Rational>;

// ---- dense polynomials (exact, index = power of x) ----

using Polynomial = std::vector<Rational>;

inline Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  Polynomial out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

inline Polynomial poly_sub(const Polynomial& a, const Polynomial& b) {
  Polynomial out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline Polynomial poly_pow(const Polynomial& base, unsigned exponent) {
  Polynomial result{Rational(1)};
  for (unsigned i = 0; i < exponent; ++i) result = poly_mul(result, base);
  return result;
}

// Expansion of num/den as a truncated series when den has an invertible
// constant term.  Polynomials are total objects, so any order is fine.
template <typename R>
TruncatedSeries<R> expand_fraction(const std::vector<R>& num,
                                   const std::vector<R>& den, int order) {
  if (den.empty() || den[0] == R(0))
    throw ZeroDenominatorError("fraction denominator has no constant term");
  TruncatedSeries<R> out(order);
  for (int n = 0; n <= order; ++n) {
    R acc = n < static_cast<int>(num.size()) ? num[n] : R(0);
    const int reach = std::min<int>(n, static_cast<int>(den.size()) - 1);
    for (int i = 1; i <= reach; ++i) acc = acc - den[i] * out[n - i];
    out.set(n, acc / den[0]);
  }
  return out;
}

// num/den with exact valuation handling; expansion to any order.
struct RationalFunction {
  Polynomial num;
  Polynomial den;

  Series expand(int order) const {
    std::size_t vd = 0;
    while (vd < den.size() && den[vd] == 0) ++vd;
    if (vd == den.size())
      throw ZeroDenominatorError("rational function denominator is zero");
    std::size_t vn = 0;
    while (vn < num.size() && num[vn] == 0) ++vn;
    if (vn == num.size()) return Series(order);  // zero numerator
    if (vn < vd)
      throw ValuationMismatchError(
          "numerator valuation below denominator valuation");
    const Polynomial shifted_num(num.begin() + static_cast<long>(vd), num.end());
    const Polynomial shifted_den(den.begin() + static_cast<long>(vd), den.end());
    return expand_fraction(shifted_num, shifted_den, order);
  }
};

// The value as an exact integer; IntegralityError otherwise.  Counting
// series travel through rationals, so every published coefficient has to
// clear this gate.
inline Int require_integer(const Rational& value) {
  if (denominator(value) != 1)
    throw IntegralityError("expected integer, got " + value.str());
  return numerator(value);
}

}  // namespace patwords
