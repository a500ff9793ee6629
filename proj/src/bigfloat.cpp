#include "curveasym/bigfloat.hpp"

#include <cstdio>
#include <vector>

namespace curveasym {

std::string BigFloat::str(int digits) const {
    char fmt[32];
    std::snprintf(fmt, sizeof(fmt), "%%.%dRg", digits);
    char buf[256];
    mpfr_snprintf(buf, sizeof(buf), fmt, v_);
    return std::string(buf);
}

BigComplex BigComplex::pow_int(long e) const {
    if (e < 0) {
        BigComplex one = BigComplex::from(Rational(1), Rational(0), prec());
        return one / pow_int(-e);
    }
    BigComplex acc = BigComplex::from(Rational(1), Rational(0), prec());
    BigComplex base = *this;
    while (e > 0) {
        if (e & 1)
            acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

BigComplex BigComplex::pow_frac(long num, long den) const {
    if (den == 1)
        return pow_int(num);
    // Principal branch: z^(num/den) = exp((num/den) * (ln|z| + i Arg z)).
    long p = prec();
    BigFloat r2 = abs2();
    BigFloat lnr = r2.log() * BigFloat::from(Rational(1, 2), p);
    BigFloat arg = im.atan2(re);
    BigFloat q = BigFloat::from(Rational(num, den), p);
    BigFloat lr = lnr * q;
    BigFloat th = arg * q;
    BigFloat radius = lr.exp();
    return BigComplex::polar(radius, th);
}

std::string BigComplex::str(int digits) const {
    std::string s = re.str(digits);
    if (!im.is_zero()) {
        s += (im.sign() >= 0 ? "+" : "-");
        s += im.abs().str(digits);
        s += "i";
    }
    return s;
}

} // namespace curveasym
