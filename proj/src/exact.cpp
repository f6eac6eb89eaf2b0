#include "shadowbound/exact.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace shadowbound {

namespace {
BigInt big_gcd(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        BigInt t = a % b;
        a = b;
        b = t;
    }
    return a;
}
}  // namespace

Rat::Rat(long long n, long long d) : num(n), den(d) { normalize(); }
Rat::Rat(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) { normalize(); }

void Rat::normalize() {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    BigInt g = big_gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rat operator+(const Rat& a, const Rat& b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
Rat operator-(const Rat& a, const Rat& b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num * b.num, a.den * b.den); }
bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }

int cmp(const Rat& a, const Rat& b) {
    BigInt lhs = a.num * b.den;
    BigInt rhs = b.num * a.den;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

int sign(const Rat& a) {
    if (a.num < 0) return -1;
    if (a.num > 0) return 1;
    return 0;
}

bool is_integer(const Rat& a) { return a.den == 1; }

Rat rat_of_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("rat_of_double: non-finite input");
    if (x == 0.0) return Rat(0);
    int e = 0;
    double m = std::frexp(x, &e);          // x = m * 2^e, |m| in [0.5, 1)
    long long mant = (long long)std::ldexp(m, 53);  // exact, 53-bit significand
    int shift = e - 53;
    BigInt num = mant;
    BigInt den = 1;
    if (shift >= 0)
        num <<= shift;
    else
        den <<= -shift;
    return Rat(num, den);
}

BigInt ceil_of(const Rat& a) {
    BigInt q = a.num / a.den;
    if (a.num > 0 && a.num % a.den != 0) q += 1;
    return q;
}

Rat binom2_rat(const Rat& t) { return Rat(t.num * (t.num - t.den), t.den * t.den * 2); }

int cmp_density_vs_regime_threshold(const Rat& d) {
    // d > d*  iff  5*sqrt(57) > 47 - 24d.
    Rat L = Rat(47) - Rat(24) * d;
    if (sign(L) <= 0) return 1;
    Rat L2 = L * L;
    return -cmp(L2, Rat(1425));  // L^2 < 1425 -> d > d*
}

int cmp_r_plus_t_vs_5n_over_6(long long n, const Rat& t) {
    Rat A = Rat(5 * n, 6) - t;
    Rat R = binom2_rat(t) - binom2_rat(Rat(n - 2, 2));
    if (sign(R) < 0) throw std::invalid_argument("cmp_r_plus_t_vs_5n_over_6: binom2(t) < binom2(n/2-1)");
    if (cmp(A, Rat(1)) < 0) return 1;  // r >= 1 > A
    // sign(r - A) = sign(binom2(r) - binom2(A)) on [1, inf)
    return cmp(Rat(2) * R, Rat(3) * A * (A - Rat(1)));
}

std::string to_string(const Rat& a) {
    std::ostringstream os;
    os << a.num;
    if (a.den != 1) os << "/" << a.den;
    return os.str();
}

}  // namespace shadowbound
