#pragma once

namespace shadowbound {

// Generalized binomial coefficient t(t-1)...(t-k+1)/k! for real t and integer
// k >= 1.  Exact (correctly rounded) for nonnegative integer t whenever the
// value fits the integer fast path; falling-factorial product otherwise.
double binom_real(double t, int k);

// The unique t >= k-1 with binom_real(t, k) = m, for m >= 0.  Closed-form
// (larger quadratic root) for k = 2, bracketed bisection for k >= 3.
// Back-substitution error is below 1e-9 relative.
double binom_inverse(double m, int k);

// Exact integer binomial; throws on overflow of unsigned long long.
unsigned long long binom_ull(int n, int k);

}  // namespace shadowbound
