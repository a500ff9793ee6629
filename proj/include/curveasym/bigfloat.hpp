#ifndef CURVEASYM_BIGFLOAT_HPP
#define CURVEASYM_BIGFLOAT_HPP

#include <mpfr.h>

#include <string>

#include "curveasym/rational.hpp"

namespace curveasym {

/// Arbitrary-precision float; a thin RAII wrapper over mpfr_t.
class BigFloat {
public:
    explicit BigFloat(long prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from(const Rational& q, long prec, mpfr_rnd_t rnd = MPFR_RNDN) {
        BigFloat r(prec);
        mpfr_set_q(r.v_, q.get_mpq_t(), rnd);
        return r;
    }
    static BigFloat from_long(long x, long prec) {
        BigFloat r(prec);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }
    static BigFloat from_double(double x, long prec) {
        BigFloat r(prec);
        mpfr_set_d(r.v_, x, MPFR_RNDN);
        return r;
    }
    static BigFloat pi(long prec) {
        BigFloat r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    long prec() const { return mpfr_get_prec(v_); }
    bool is_zero() const { return mpfr_zero_p(v_); }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Exact value as a rational (mpfr values are dyadic).
    Rational to_rational() const {
        Rational q;
        mpfr_get_q(q.get_mpq_t(), v_);
        return q;
    }
    std::string str(int digits = 12) const;

    BigFloat operator-() const { BigFloat r(prec()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

#define CURVEASYM_BF_BINOP(op, fn)                                               \
    BigFloat operator op(const BigFloat& o) const {                              \
        BigFloat r(std::max(prec(), o.prec()));                                  \
        fn(r.v_, v_, o.v_, MPFR_RNDN);                                           \
        return r;                                                                \
    }
    CURVEASYM_BF_BINOP(+, mpfr_add)
    CURVEASYM_BF_BINOP(-, mpfr_sub)
    CURVEASYM_BF_BINOP(*, mpfr_mul)
    CURVEASYM_BF_BINOP(/, mpfr_div)
#undef CURVEASYM_BF_BINOP

    bool operator<(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) < 0; }
    bool operator>(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) > 0; }
    bool operator<=(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) <= 0; }
    bool operator>=(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) >= 0; }

    BigFloat abs() const { BigFloat r(prec()); mpfr_abs(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat sqrt() const { BigFloat r(prec()); mpfr_sqrt(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat log() const { BigFloat r(prec()); mpfr_log(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat exp() const { BigFloat r(prec()); mpfr_exp(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat cos() const { BigFloat r(prec()); mpfr_cos(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat sin() const { BigFloat r(prec()); mpfr_sin(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat atan2(const BigFloat& x) const {
        BigFloat r(std::max(prec(), x.prec()));
        mpfr_atan2(r.v_, v_, x.v_, MPFR_RNDN);
        return r;
    }

private:
    mpfr_t v_;
};

/// Complex number with BigFloat parts.
struct BigComplex {
    BigFloat re, im;

    explicit BigComplex(long prec = 64) : re(prec), im(prec) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    static BigComplex from(const Rational& r, const Rational& i, long prec) {
        return {BigFloat::from(r, prec), BigFloat::from(i, prec)};
    }
    /// radius * exp(i * theta)
    static BigComplex polar(const BigFloat& radius, const BigFloat& theta) {
        return {radius * theta.cos(), radius * theta.sin()};
    }

    long prec() const { return std::max(re.prec(), im.prec()); }
    BigComplex operator-() const { return {-re, -im}; }
    BigComplex operator+(const BigComplex& o) const { return {re + o.re, im + o.im}; }
    BigComplex operator-(const BigComplex& o) const { return {re - o.re, im - o.im}; }
    BigComplex operator*(const BigComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    BigComplex operator/(const BigComplex& o) const {
        BigFloat n = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
    BigFloat abs2() const { return re * re + im * im; }
    BigFloat abs() const { return abs2().sqrt(); }
    /// Principal fractional power z^(num/den), den >= 1.
    BigComplex pow_frac(long num, long den) const;
    BigComplex pow_int(long e) const;

    std::string str(int digits = 12) const;
};

} // namespace curveasym

#endif
