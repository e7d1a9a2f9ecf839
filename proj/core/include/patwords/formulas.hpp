#pragma once

#include <string>
#include <vector>

#include "patwords/numeric.hpp"
#include "patwords/pattern.hpp"
#include "patwords/qpolynomial.hpp"
#include "patwords/series.hpp"

namespace patwords {
namespace formulas {

// Avoidance generating functions F(x;k) for one pattern, one row per
// alphabet size k = 0..k_max, all truncated at the same order.  Rows are
// exact rationals; counts() applies the integrality gate.
struct SeriesFamily {
  int order = 0;
  std::vector<Series> rows;  // rows[k] = F(x;k)
  std::string source;

  int k_max() const { return static_cast<int>(rows.size()) - 1; }
  const Series& row(int k) const { return rows.at(static_cast<std::size_t>(k)); }

  // Row k as exact integers; IntegralityError if any coefficient is not
  // an integer.
  std::vector<Int> counts(int k) const;
};

// ---- two-letter patterns ----

// Avoiding 1-1: words with no repeated letter at all; the n-th lower
// factorial of k.
Int count_1_1(long n, long k);

// Avoiding 11: no equal adjacent letters; k(k-1)^(n-1) for n >= 1.
Int count_11(long n, long k);

// Avoiding 1-2 (equivalently 12): non-increasing words; C(n+k-1, n).
Int count_1_2(long n, long k);

// Occurrence polynomial of the all-equal pattern 11...1 of the given
// length (>= 2), from the recurrence
//   F(n) = (k-1+q) F(n-1) + (k-1)(1-q) [F(n-2) + ... + F(n-length+1)]
// with F(n) = k^n for n < length.
QPolynomial occurrence_poly_all_ones(int length, long n, long k);

// Occurrence polynomial of the adjacent ascent 12, from
//   F(n) = sum_{j=1}^{k} C(k,j) (q-1)^(j-1) F(n-j),  F(0) = 1.
QPolynomial occurrence_poly_12(long n, long k);

// ---- classical three-letter patterns ----

// Avoiding 1-2-3 (equivalently 1-3-2).  Evaluated in exact rationals;
// throws IntegralityError where the closed form fails to produce an
// integer instead of rounding.
Int count_1_2_3(long n, long k);

// Avoiding 1-1-1: Bessel-number sum; zero once n > 2k.
Int count_1_1_1(long n, long k);

// Avoiding 1-1-2 (equivalently 1-2-1): Stirling-weighted binomial sum.
Int count_1_1_2(long n, long k);

// ---- one-dash three-letter patterns (series families) ----

// 11-1.  The workhorse is the count recurrence
//   a(n,k) = (k-1) a(n-1,k) + k a(n-2,k-1);
// the _closed variant expands the determinant form
//   prod A_i + sum_j B_j prod_{i>j} A_i
// with A_j = j x^2 / (1-(j-1)x), B_j = (1+x)/(1-(j-1)x).
SeriesFamily series_11_1(int k_max, int order);
SeriesFamily series_11_1_closed(int k_max, int order);

// 11-2.  Product form prod_j (1-(j-1)x)/(1-jx-x^2) and, independently,
// the count recurrence
//   f(n,k) = f(n,k-1) + f(n-1,k) + sum_j (k-1)(k-2)^j f(n-2-j,k).
// series_11_2 checks the two against each other before returning.
SeriesFamily series_11_2(int k_max, int order);
SeriesFamily series_11_2_product(int k_max, int order);
SeriesFamily series_11_2_recurrence(int k_max, int order);

// 21-1 (equivalently 21-2), from the first-letter recurrence
//   g(n,k,i) = f(n-1,k) + sum_{j<i} (g(n-1,k-1,j) - g(n-1,k,j)).
SeriesFamily series_21_1(int k_max, int order);

// 12-3 (equivalently 21-3).  Product form prod_j 1/(1 - x/(1-x)^j) and
// the count recurrence f(n,k) = f(n,k-1) + sum_j C(j-1+k-2,k-2) f(n-j,k);
// series_12_3 checks the two against each other.
SeriesFamily series_12_3(int k_max, int order);
SeriesFamily series_12_3_product(int k_max, int order);
SeriesFamily series_12_3_recurrence(int k_max, int order);

// 13-2, from the first-letter dynamic program
//   a(n,k,j) = sum_{i<=j+1} a(n-1,k,i) + sum_{i=j+1}^{k-1} a(n-1,i,j+1).
SeriesFamily series_13_2(int k_max, int order);

// The 13-2 first-letter table a(n,k,j) itself: words of length n over
// {1..k} avoiding 13-2 whose first letter is j.  Zero outside 1 <= j <= k
// or n < 1.  Kept accessible for the boundary and difference identities.
struct Table13_2 {
  int n_max = 0;
  int k_max = 0;
  std::vector<Int> data;

  Int at(int n, int k, int j) const;
  Int avoiders(int n, int k) const;  // sum over first letters; 1 at n = 0
};
Table13_2 build_table_13_2(int n_max, int k_max);

// ---- dash-free three-letter patterns ----

// 111: (1+x+x^2) / (1-(k-1)x-(k-1)x^2).
SeriesFamily series_111(int k_max, int order);

// 122: x / ((1-x^2)^k - (1-x)), via valuation-aware division.
SeriesFamily series_122(int k_max, int order);

// 212: 1 / (1 - x sum_{j=0}^{k-1} 1/(1+jx^2)).
SeriesFamily series_212(int k_max, int order);

// 123 and 213 return the avoidance family together with the family of
// words that stay avoiding when a new maximal letter is appended; the
// latter drives the alphabet-size recursion.
struct SeriesFamilyPair {
  SeriesFamily avoid;    // F(x;k)
  SeriesFamily extend;   // D(x;k)
};

// 123.  Closed form 1 / sum_j a_j C(k,j) x^j with the period-3 signs
// a = 1,-1,0 repeating; D has the matching b = 1,0,-1 numerator.  The
// _recursive variant runs the alphabet-size recursion seeded at k = 3.
// series_123 checks the two against each other before returning.
SeriesFamilyPair series_123(int k_max, int order);
SeriesFamilyPair series_123_closed(int k_max, int order);
SeriesFamilyPair series_123_recursive(int k_max, int order);

// 213.  Closed form 1 / (1 - x - x sum_i prod_j (1-jx^2)); the recursion
// is seeded at k = 0 with F = D = 1, which pins D(x;1) = 1/(1-x) (a word
// of equal letters never starts 213 when a maximal letter is appended).
// series_213 checks the two against each other before returning.
SeriesFamilyPair series_213(int k_max, int order);
SeriesFamilyPair series_213_closed(int k_max, int order);
SeriesFamilyPair series_213_recursive(int k_max, int order);

// ---- dispatch ----

// True when a formula route exists: any pattern of length <= 3, plus the
// single-block all-equal pattern of any length.
bool has_formula(const GeneralizedPattern& pattern);

// Count via the symmetry-class representative's evaluator.  Throws
// UnsupportedPatternError when has_formula is false, IntegralityError
// where the 1-2-3 closed form breaks down.
Int dispatch_count(const GeneralizedPattern& pattern, long n, long k);

// The 21 formula-backed representatives, in a fixed documented order.
const std::vector<std::string>& formula_representatives();

}  // namespace formulas
}  // namespace patwords
