#pragma once

#include "patwords/numeric.hpp"

namespace patwords {

// Exact combinatorial numbers.  All of these throw DomainError on index
// domains that have no combinatorial meaning; out-of-support indices that
// conventionally give zero (r > n in binomial, say) return 0.

Int factorial(long n);

// n >= 0 here; r < 0 or r > n gives 0.  binomial(-1, 0) = 1 via the
// universal r == 0 case, which is the only negative-n value we need.
Int binomial(long n, long r);

Int catalan(long t);

Int central_binomial(long t);  // binomial(2t, t)

// k(k-1)...(k-n+1), the n-th lower factorial; 0 once the product crosses 0.
Int falling_factorial(long k, long n);

// F(1) = F(2) = 1 indexing; F(0) = 0.
Int fibonacci(long n);

// (r+s)! / (2^s (r-s)! s!); requires 0 <= s <= r.
Int bessel_first(long r, long s);

// Signless Stirling numbers of the first kind: permutations of n elements
// with j cycles.  c(0,0) = 1; zero outside 0 <= j <= n.
Int stirling_first_signless(long n, long j);

}  // namespace patwords
