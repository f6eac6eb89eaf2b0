#include "shadowbound/combinatorics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace shadowbound {

namespace {

// C(n, k) in 128-bit arithmetic; returns false on overflow.
bool binom_u128(unsigned long long n, int k, unsigned __int128& out) {
    if ((unsigned long long)k > n) {
        out = 0;
        return true;
    }
    int kk = (int)std::min<unsigned long long>((unsigned long long)k, n - (unsigned long long)k);
    unsigned __int128 r = 1;
    const unsigned __int128 maxv = ~(unsigned __int128)0;
    for (int i = 0; i < kk; ++i) {
        unsigned long long f = n - (unsigned long long)i;
        if (r > maxv / f) return false;
        r = r * f / (unsigned long long)(i + 1);  // exact: r holds C(n, i+1) after the step
    }
    out = r;
    return true;
}

}  // namespace

double binom_real(double t, int k) {
    if (k < 1) throw std::invalid_argument("binom_real: k must be >= 1");
    if (t >= 0.0 && t == std::floor(t) && t <= 1.0e18) {
        unsigned __int128 r = 0;
        if (binom_u128((unsigned long long)t, k, r)) return (double)r;
    }
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= (t - (double)i);
    for (int i = 2; i <= k; ++i) r /= (double)i;
    return r;
}

double binom_inverse(double m, int k) {
    if (k < 1) throw std::invalid_argument("binom_inverse: k must be >= 1");
    if (m < 0.0) throw std::invalid_argument("binom_inverse: m must be >= 0");
    if (k == 1) return m;
    if (k == 2) return 0.5 * (1.0 + std::sqrt(1.0 + 8.0 * m));
    double lo = (double)(k - 1);
    double hi = (double)k + m;  // C(m+k, k) >= m+1 > m
    while (binom_real(hi, k) < m) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
        double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;
        if (binom_real(mid, k) < m)
            lo = mid;
        else
            hi = mid;
    }
    return lo + 0.5 * (hi - lo);
}

unsigned long long binom_ull(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("binom_ull: negative argument");
    unsigned __int128 r = 0;
    if (!binom_u128((unsigned long long)n, k, r) || r > std::numeric_limits<unsigned long long>::max())
        throw std::overflow_error("binom_ull: result does not fit unsigned long long");
    return (unsigned long long)r;
}

}  // namespace shadowbound
