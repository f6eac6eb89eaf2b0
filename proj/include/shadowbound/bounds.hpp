#pragma once

#include "shadowbound/exact.hpp"
#include "shadowbound/graph.hpp"

#include <limits>
#include <optional>

namespace shadowbound {

// Which closed-form branch produced a bound.  CLIQUE_OVERLAP corresponds to
// the two-overlapping-cliques extremal shape, REGULAR_SPLIT to the two-clique
// regular split; BOUNDARY tags parameters within tolerance of the crossover
// (the two expressions agree there).
enum class Regime { CliqueOverlap, RegularSplit, Boundary };
const char* regime_name(Regime r);

struct BoundReport {
    double value = 0.0;
    Regime regime = Regime::CliqueOverlap;
    double r = std::numeric_limits<double>::quiet_NaN();
    std::optional<double> r_prime;
    double threshold_t = 0.0;   // crossover t (approx 0.6208*n) for this n
    bool exact = false;         // integer-parameter tightness: n/2, t, r all integers
    bool asymptotic_caveat = false;
};

// Shared parameterization: a vertex-degree threshold can be given either as a
// density d (each vertex in >= d*C(n,2) triangles) or as the real t with
// binom2(t) equal to that count.  `threshold` carries the exact rational value.
struct BoundParams {
    long long n = 0;
    double t = 0.0;
    double d = 0.0;
    Rat threshold;

    static BoundParams from_density(long long n, double d);
    static BoundParams from_t(long long n, double t);
};

// Shadow size lower bound for a k-uniform family of the given size
// (continuous Kruskal-Katona form): binom(t, k-1) where binom(t, k) = size.
double kk_shadow_bound(double family_size, int k);

// Exact minimum shadow size over k-uniform families of the given size on n
// vertices; the colex initial segment attains it.
long long kk_exact_min_shadow(long long family_size, int k, int n);

// d^((k-2)/(k-1)) * C(n, k-1): the bound obtained by applying the continuous
// Kruskal-Katona step to every vertex link.
double naive_mindeg_shadow_bound(long long n, int k, double d);

// Shadow lower bound for 3-uniform families with min vertex degree d*C(n,2),
// d in [1/4, 1): (4*sqrt(d) - 2d - 1)*C(n,2) below the regime threshold
// (47 - 5*sqrt(57))/24, (1/2 + sqrt((4d-1)/12))*C(n,2) above it.
BoundReport shadow_mindeg_bound(long long n, double d);

// Larger root r >= 1 of binom2(n/2 - 1) + 3*binom2(r) = binom2(t).
// Requires n/2 <= t + 1 <= n; guarantees r <= n/2.
double solve_r(long long n, double t);

// Odd-n variant: binom2((n-3)/2) + 3*binom2(r') = binom2(t).
double solve_r_prime(long long n, double t);

// f(x) = binom2(t) + x(n - x) - binom2(n - x - 1).
double f_eval(long long n, double t, double x);

// The t at which f(t) = f(n/2 + r - 1):
// (5/4)n - sqrt(57 n^2 - 72 n)/12 - 1.  f(t) is the smaller side below it.
double comparison_threshold(long long n);

// Minimum edge count of an n-vertex graph in which every vertex lies in at
// least binom2(t) triangles: f(t) when r + t <= 5n/6, else f(n/2 + r - 1).
BoundReport edge_lower_bound(long long n, double t);

// f(delta(G)); the underlying inequality e(G) >= f(delta(G)) holds for any G
// whose every vertex lies in >= binom2(t) triangles.
double delta_based_bound(const Graph& g, double t);

// Equality conditions for e(G) = f(delta(G)): some minimum-degree vertex v0
// has exactly binom2(t) edges inside N(v0), every vertex outside N(v0) has
// degree delta(G), and the non-neighbors of v0 form a clique.
bool check_delta_equality(const Graph& g, double t);

// Second-order term of r: r = 1/2 + (n/2)sqrt((4d-1)/3) + h(n), with
// h(n) = (sqrt((4d-1)n^2 + (6-4d)n - 5) - sqrt(4d-1)*n) / (2*sqrt(3)).
// Requires d > 1/4 and n >= 2; h is O(1) in n and nonnegative for n >= 3.
double h_term(long long n, double d);

// ceil of binom2(t), computed on the exact rational value of t.
long long required_triangle_degree(double t);

}  // namespace shadowbound
