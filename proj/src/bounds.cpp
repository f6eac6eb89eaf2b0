#include "shadowbound/bounds.hpp"

#include "shadowbound/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace shadowbound {

namespace {

constexpr double kTol = 1e-9;

// Integer value of t when the exact rational t is integral, else nothing.
std::optional<long long> exact_integer(double x) {
    if (!std::isfinite(x) || x != std::floor(x)) return std::nullopt;
    if (std::abs(x) > 4.0e18) return std::nullopt;
    return (long long)x;
}

// True when an integer r >= 1 satisfies 3*binom2(r) = binom2(t) - binom2(n/2-1)
// exactly, for integer t and even n.
bool integer_r_exists(long long n, long long t, long long* out_r) {
    // 3 r (r-1) = t(t-1) - (n/2-1)(n/2-2); all integer arithmetic.
    long long m = n / 2 - 1;
    long long rhs = t * (t - 1) - m * (m - 1);
    if (rhs < 0) return false;
    if (rhs % 3 != 0) return false;
    long long target = rhs / 3;  // r(r-1)
    long long r = (long long)std::llround(0.5 * (1.0 + std::sqrt(1.0 + 4.0 * (double)target)));
    for (long long c = std::max(1ll, r - 2); c <= r + 2; ++c) {
        if (c * (c - 1) == target) {
            if (out_r) *out_r = c;
            return true;
        }
    }
    return false;
}

}  // namespace

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::CliqueOverlap: return "CLIQUE_OVERLAP";
        case Regime::RegularSplit: return "REGULAR_SPLIT";
        case Regime::Boundary: return "BOUNDARY";
    }
    return "?";
}

BoundParams BoundParams::from_density(long long n, double d) {
    if (n < 2) throw std::invalid_argument("BoundParams: n must be >= 2");
    BoundParams p;
    p.n = n;
    p.d = d;
    p.threshold = rat_of_double(d) * Rat(n * (n - 1), 2);
    p.t = binom_inverse(d * binom_real((double)n, 2), 2);
    return p;
}

BoundParams BoundParams::from_t(long long n, double t) {
    if (n < 2) throw std::invalid_argument("BoundParams: n must be >= 2");
    BoundParams p;
    p.n = n;
    p.t = t;
    p.threshold = binom2_rat(rat_of_double(t));
    p.d = binom_real(t, 2) / binom_real((double)n, 2);
    return p;
}

double kk_shadow_bound(double family_size, int k) {
    if (k < 2) throw std::invalid_argument("kk_shadow_bound: k must be >= 2");
    if (family_size < 0) throw std::invalid_argument("kk_shadow_bound: negative family size");
    if (family_size == 0) return 0.0;  // degenerate: the Lovasz form assumes a nonempty family
    double t = binom_inverse(family_size, k);
    return binom_real(t, k - 1);
}

long long kk_exact_min_shadow(long long family_size, int k, int n) {
    if (k < 2) throw std::invalid_argument("kk_exact_min_shadow: k must be >= 2");
    if (n < 0) throw std::invalid_argument("kk_exact_min_shadow: n must be >= 0");
    if (family_size < 0) throw std::invalid_argument("kk_exact_min_shadow: negative family size");
    unsigned long long cap = 0;
    try {
        cap = binom_ull(n, k);
    } catch (const std::overflow_error&) {
        cap = (unsigned long long)-1;
    }
    if ((unsigned long long)family_size > cap)
        throw std::invalid_argument("kk_exact_min_shadow: family size exceeds binom(n, k)");
    if (family_size == 0) return 0;
    // First family_size k-sets in colex order, then the size of their shadow.
    SetFamily f(n, k);
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    for (long long c = 0;;) {
        f.add_edge(comb);
        if (++c == family_size) break;
        // colex successor: bump the lowest element that has room below its
        // successor, resetting everything under it.
        int i = 0;
        while (i + 1 < k && comb[i] + 1 == comb[i + 1]) ++i;
        ++comb[i];
        for (int j = 0; j < i; ++j) comb[j] = j;
    }
    return (long long)shadow(f).size();
}

double naive_mindeg_shadow_bound(long long n, int k, double d) {
    if (k < 3) throw std::invalid_argument("naive_mindeg_shadow_bound: k must be >= 3");
    if (n < k) throw std::invalid_argument("naive_mindeg_shadow_bound: n must be >= k");
    if (d < 0.0 || d > 1.0) throw std::invalid_argument("naive_mindeg_shadow_bound: d must be in [0, 1]");
    double expo = (double)(k - 2) / (double)(k - 1);
    return std::pow(d, expo) * binom_real((double)n, k - 1);
}

double solve_r(long long n, double t) {
    if (n < 2) throw std::invalid_argument("solve_r: n must be >= 2");
    double lo = n / 2.0 - 1.0, hi = (double)(n - 1);
    if (!(t >= lo - kTol && t <= hi + kTol)) throw std::invalid_argument("solve_r: t out of [n/2-1, n-1]");
    double target = binom_real(t, 2) - binom_real(n / 2.0 - 1.0, 2);
    if (target < 0) {
        if (target < -kTol * std::max(1.0, binom_real(t, 2)))
            throw std::invalid_argument("solve_r: binom2(t) below binom2(n/2-1)");
        target = 0.0;
    }
    double r = 0.5 * (1.0 + std::sqrt(1.0 + 8.0 * target / 3.0));
    double cap = n / 2.0;
    if (r > cap) {
        if (r > cap + 1e-6) throw std::logic_error("solve_r: r exceeded n/2");
        r = cap;
    }
    return r;
}

double solve_r_prime(long long n, double t) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("solve_r_prime: n must be odd and >= 3");
    // Natural domain is wider than solve_r's: the right side is zero already
    // at t = (n-3)/2, where the larger root is 1.
    double lo = (n - 3) / 2.0, hi = (double)(n - 1);
    if (!(t >= lo - kTol && t <= hi + kTol)) throw std::invalid_argument("solve_r_prime: t out of [(n-3)/2, n-1]");
    double target = binom_real(t, 2) - binom_real((n - 3) / 2.0, 2);
    if (target < 0) {
        if (target < -kTol * std::max(1.0, binom_real(t, 2)))
            throw std::invalid_argument("solve_r_prime: binom2(t) below binom2((n-3)/2)");
        target = 0.0;
    }
    return 0.5 * (1.0 + std::sqrt(1.0 + 8.0 * target / 3.0));
}

double f_eval(long long n, double t, double x) {
    return binom_real(t, 2) + x * ((double)n - x) - binom_real((double)n - x - 1.0, 2);
}

double comparison_threshold(long long n) {
    if (n < 2) throw std::invalid_argument("comparison_threshold: n must be >= 2");
    double nn = (double)n;
    return 1.25 * nn - std::sqrt(57.0 * nn * nn - 72.0 * nn) / 12.0 - 1.0;
}

BoundReport edge_lower_bound(long long n, double t) {
    if (n < 2) throw std::invalid_argument("edge_lower_bound: n must be >= 2");
    if (!(t + 1.0 >= n / 2.0 - kTol && t + 1.0 <= (double)n + kTol))
        throw std::invalid_argument("edge_lower_bound: need n/2 <= t+1 <= n");
    double r = solve_r(n, t);
    int s = cmp_r_plus_t_vs_5n_over_6(n, rat_of_double(t));
    double ft = f_eval(n, t, t);
    double fr = f_eval(n, t, n / 2.0 + r - 1.0);

    BoundReport rep;
    if (s <= 0) {
        rep.value = ft;
        rep.regime = Regime::CliqueOverlap;
    } else {
        rep.value = fr;
        rep.regime = Regime::RegularSplit;
    }
    if (std::abs(r + t - 5.0 * n / 6.0) <= kTol * (double)n) rep.regime = Regime::Boundary;
    rep.r = r;
    if (n % 2 == 1) rep.r_prime = solve_r_prime(n, t);
    rep.threshold_t = comparison_threshold(n);
    rep.exact = false;
    if (n % 2 == 0) {
        if (auto ti = exact_integer(t)) rep.exact = integer_r_exists(n, *ti, nullptr);
    }
    rep.asymptotic_caveat = false;  // the edge bound is non-asymptotic
    return rep;
}

BoundReport shadow_mindeg_bound(long long n, double d) {
    if (n < 12) throw std::invalid_argument("shadow_mindeg_bound: n must be >= 12");
    Rat dr = rat_of_double(d);
    if (cmp(dr, Rat(1, 4)) < 0 || cmp(dr, Rat(1)) >= 0)
        throw std::invalid_argument("shadow_mindeg_bound: d must lie in [1/4, 1)");
    double cn2 = binom_real((double)n, 2);
    double clique = (4.0 * std::sqrt(d) - 2.0 * d - 1.0) * cn2;
    double split = (0.5 + std::sqrt((4.0 * d - 1.0) / 12.0)) * cn2;
    int s = cmp_density_vs_regime_threshold(dr);

    BoundReport rep;
    rep.value = (s < 0) ? clique : split;
    rep.regime = (s < 0) ? Regime::CliqueOverlap : Regime::RegularSplit;
    double dstar = (47.0 - 5.0 * std::sqrt(57.0)) / 24.0;
    if (std::abs(d - dstar) <= kTol) rep.regime = Regime::Boundary;
    rep.threshold_t = comparison_threshold(n);
    rep.asymptotic_caveat = n < 100;

    // derived split parameter when the implied t is realizable on n vertices
    double t = binom_inverse(d * cn2, 2);
    if (t <= (double)(n - 1) + kTol) {
        rep.r = solve_r(n, std::min(t, (double)(n - 1)));
        if (n % 2 == 0) {
            if (auto ti = exact_integer(t)) {
                // d*C(n,2) must match binom2(ti) exactly for the tight flag
                if (binom2_rat(Rat(*ti)) == dr * Rat(n * (n - 1), 2))
                    rep.exact = integer_r_exists(n, *ti, nullptr);
            }
        }
    }
    return rep;
}

double delta_based_bound(const Graph& g, double t) {
    if (g.n() == 0) throw std::invalid_argument("delta_based_bound: empty graph");
    return f_eval(g.n(), t, g.min_degree());
}

bool check_delta_equality(const Graph& g, double t) {
    int n = g.n();
    if (n == 0) throw std::invalid_argument("check_delta_equality: empty graph");
    int delta = g.min_degree();
    Rat need = binom2_rat(rat_of_double(t));
    for (int v0 = 0; v0 < n; ++v0) {
        if (g.degree(v0) != delta) continue;
        if (!(Rat(g.neighborhood_edge_count(v0)) == need)) continue;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            if (v == v0 || g.has_edge(v0, v)) continue;
            if (g.degree(v) != delta) ok = false;
        }
        if (!ok) continue;
        // non-neighbors of v0 (excluding v0) must induce a clique
        for (int u = 0; u < n && ok; ++u) {
            if (u == v0 || g.has_edge(v0, u)) continue;
            for (int w = u + 1; w < n && ok; ++w) {
                if (w == v0 || g.has_edge(v0, w)) continue;
                if (!g.has_edge(u, w)) ok = false;
            }
        }
        if (ok) return true;
    }
    return false;
}

double h_term(long long n, double d) {
    if (n < 2) throw std::invalid_argument("h_term: n must be >= 2");
    Rat dr = rat_of_double(d);
    if (cmp(dr, Rat(1, 4)) <= 0 || cmp(dr, Rat(1)) >= 0)
        throw std::invalid_argument("h_term: d must lie in (1/4, 1)");
    double nn = (double)n;
    double rad = (4.0 * d - 1.0) * nn * nn + (6.0 - 4.0 * d) * nn - 5.0;
    return (std::sqrt(rad) - std::sqrt(4.0 * d - 1.0) * nn) / (2.0 * std::sqrt(3.0));
}

long long required_triangle_degree(double t) {
    Rat c = binom2_rat(rat_of_double(t));
    BigInt ceilv = ceil_of(c);
    if (ceilv < 0) return 0;
    if (ceilv > BigInt(4000000000000000000ll))
        throw std::invalid_argument("required_triangle_degree: threshold too large");
    return ceilv.convert_to<long long>();
}

}  // namespace shadowbound
