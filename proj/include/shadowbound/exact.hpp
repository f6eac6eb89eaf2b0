#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace shadowbound {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational arithmetic used for regime and threshold decisions.  Every
// branch that the closed-form bounds take is decided on cleared / squared
// integer forms, so an irrational intermediate never enters a comparison.
struct Rat {
    BigInt num;
    BigInt den;  // always > 0

    Rat() : num(0), den(1) {}
    Rat(long long v) : num(v), den(1) {}
    Rat(long long n, long long d);
    Rat(BigInt n, BigInt d);

    void normalize();
};

Rat operator+(const Rat& a, const Rat& b);
Rat operator-(const Rat& a, const Rat& b);
Rat operator*(const Rat& a, const Rat& b);
bool operator==(const Rat& a, const Rat& b);

// sign of a - b: -1, 0, or +1
int cmp(const Rat& a, const Rat& b);
int sign(const Rat& a);

bool is_integer(const Rat& a);

// Exact value of a finite double (every finite double is a dyadic rational).
Rat rat_of_double(double x);

// Smallest integer >= a.
BigInt ceil_of(const Rat& a);

// t(t-1)/2, exactly.
Rat binom2_rat(const Rat& t);

// sign of d - (47 - 5*sqrt(57))/24, i.e. which branch of the density bound
// applies.  Decided via (47 - 24d)^2 vs 1425, all integers.
int cmp_density_vs_regime_threshold(const Rat& d);

// sign of (r + t) - 5n/6 where r >= 1 is the larger root of
//     binom2(n/2 - 1) + 3*binom2(r) = binom2(t).
// Equivalent integer form: with A = 5n/6 - t, the sum is <= 5n/6 iff
// A >= 1 and 2*(binom2(t) - binom2(n/2-1)) <= 3*A*(A-1).
int cmp_r_plus_t_vs_5n_over_6(long long n, const Rat& t);

std::string to_string(const Rat& a);

}  // namespace shadowbound
