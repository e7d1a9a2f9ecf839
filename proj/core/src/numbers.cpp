#include "patwords/numbers.hpp"

#include <vector>

#include "patwords/errors.hpp"

namespace patwords {

Int factorial(long n) {
  if (n < 0) throw DomainError("factorial of negative argument");
  Int result = 1;
  for (long i = 2; i <= n; ++i) result *= i;
  return result;
}

Int binomial(long n, long r) {
  if (r < 0) return 0;
  if (r == 0) return 1;
  if (n < 0) throw DomainError("binomial with negative upper index");
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  Int result = 1;
  for (long i = 0; i < r; ++i) {
    result *= (n - i);
    result /= (i + 1);  // exact: prefix products are binomials
  }
  return result;
}

Int catalan(long t) {
  if (t < 0) throw DomainError("catalan of negative index");
  return binomial(2 * t, t) / (t + 1);
}

Int central_binomial(long t) {
  if (t < 0) throw DomainError("central binomial of negative index");
  return binomial(2 * t, t);
}

Int falling_factorial(long k, long n) {
  if (n < 0) throw DomainError("falling factorial with negative length");
  Int result = 1;
  for (long i = 0; i < n; ++i) result *= (k - i);
  return result;
}

Int fibonacci(long n) {
  if (n < 0) throw DomainError("fibonacci of negative index");
  Int a = 0, b = 1;  // F(0), F(1)
  for (long i = 0; i < n; ++i) {
    Int next = a + b;
    a = b;
    b = next;
  }
  return a;
}

Int bessel_first(long r, long s) {
  if (s < 0 || r < 0 || s > r)
    throw DomainError("bessel_first requires 0 <= s <= r");
  return factorial(r + s) / (pow_int(2, static_cast<unsigned long>(s)) *
                             factorial(r - s) * factorial(s));
}

Int stirling_first_signless(long n, long j) {
  if (n < 0) throw DomainError("stirling number of negative order");
  if (j < 0 || j > n) return 0;
  // c(n,j) = c(n-1,j-1) + (n-1) c(n-1,j), one row at a time.
  std::vector<Int> row{1};  // c(0,0)
  for (long m = 1; m <= n; ++m) {
    std::vector<Int> next(static_cast<std::size_t>(m) + 1, Int(0));
    for (long i = 0; i < m; ++i) {
      next[static_cast<std::size_t>(i) + 1] += row[static_cast<std::size_t>(i)];
      next[static_cast<std::size_t>(i)] += Int(m - 1) * row[static_cast<std::size_t>(i)];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(j)];
}

}  // namespace patwords
