#ifndef CURVEASYM_RATIONAL_HPP
#define CURVEASYM_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace curveasym {

using Integer = mpz_class;
using Rational = mpq_class;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw Error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat_pow(const Rational& base, long e) {
    if (e == 0)
        return Rational(1);
    Rational b = e > 0 ? base : Rational(1) / base;
    long n = e > 0 ? e : -e;
    Rational acc(1);
    while (n > 0) {
        if (n & 1)
            acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline Integer int_gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer int_lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline long long_gcd(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { long t = a % b; a = b; b = t; }
    return a;
}

inline long long_lcm(long a, long b) {
    if (a == 0 || b == 0) return 0;
    return a / long_gcd(a, b) * b;
}

// Floor of a rational as an integer.
inline Integer rat_floor(const Rational& q) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return f;
}

inline std::string rat_str(const Rational& q) {
    return q.get_str();
}

} // namespace curveasym

#endif
