#ifndef CURVEASYM_PUISEUX_HPP
#define CURVEASYM_PUISEUX_HPP

#include <map>
#include <optional>

#include "curveasym/algnum.hpp"

namespace curveasym {

/// Truncated Puiseux series sum_k c_k t^(k/ram).
///
/// Exponents may be negative (Laurent part). `trunc` is the certainty bound:
/// terms with exponent >= trunc are unknown (O(t^trunc)); a series without a
/// bound is exact. Stored terms always have exponent < trunc, nonzero
/// coefficient, and reduced ramification (gcd of ram and all keys is 1).
///
/// A branch series r(z) at infinity is held in the same representation via
/// z = 1/t; its z-exponents are the negated t-exponents, so the unknown tail
/// O(t^trunc) is the z-tail of exponents <= -trunc.
class PuiseuxSeries {
public:
    PuiseuxSeries() = default; // exact zero

    static PuiseuxSeries zero_truncated(const Rational& trunc);
    static PuiseuxSeries constant(AlgNum c);
    static PuiseuxSeries monomial(AlgNum c, const Rational& exponent);

    long ram() const { return ram_; }
    const std::map<long, AlgNum>& terms() const { return terms_; }
    bool is_exact() const { return !trunc_.has_value(); }
    const std::optional<Rational>& trunc() const { return trunc_; }
    bool known_zero() const { return terms_.empty() && is_exact(); }
    bool no_known_terms() const { return terms_.empty(); }

    Rational exponent_of(long key) const { return Rational(key, ram_); }
    /// Order of the lowest known term; nullopt when no terms are known.
    std::optional<Rational> ord() const;
    /// Lower bound on the order (trunc when nothing is known yet).
    Rational ord_low() const;
    AlgNum coeff_at(const Rational& exponent) const;
    AlgNum leading_coeff() const;

    PuiseuxSeries operator-() const;
    PuiseuxSeries operator+(const PuiseuxSeries& o) const;
    PuiseuxSeries operator-(const PuiseuxSeries& o) const;
    PuiseuxSeries operator*(const PuiseuxSeries& o) const;
    PuiseuxSeries scale(const AlgNum& c) const;
    PuiseuxSeries shift(const Rational& dexp) const; // multiply by t^dexp
    PuiseuxSeries pow(int e) const;

    /// Reciprocal; the lowest term must be known and nonzero. `budget` caps
    /// the expansion order when the input is exact.
    PuiseuxSeries invert(const Rational& budget) const;
    PuiseuxSeries divide(const PuiseuxSeries& o, const Rational& budget) const;

    PuiseuxSeries truncate_at(const Rational& bound) const;
    /// Conjugate sheet: multiply the term of exponent e by eps^(N*e) where
    /// eps = e^(2*pi*i*alpha/N). Requires N divisible by ram.
    PuiseuxSeries conjugate(long N, long alpha) const;

    void insert_term(const Rational& exponent, AlgNum c);
    void set_trunc(std::optional<Rational> t);

    /// Evaluate at a numeric point on the principal branch of t^(1/ram),
    /// optionally on the conjugate sheet alpha of a class of ramification N.
    BigComplex eval(const BigComplex& t, long prec, long N = 1, long alpha = 0) const;

    std::string str(const std::string& var = "t") const;
    /// Render with exponents negated (the z = 1/t view used at infinity).
    std::string str_zview(const std::string& var = "z") const;

private:
    void reduce_ram();
    void align(const PuiseuxSeries& o, PuiseuxSeries& a, PuiseuxSeries& b) const;
    long ram_ = 1;
    std::map<long, AlgNum> terms_;
    std::optional<Rational> trunc_;
};

/// p(s) evaluated on a series, with truncation tracking.
PuiseuxSeries qpoly_eval_series(const QPoly& p, const PuiseuxSeries& s, const Rational& budget);
/// R = num/den evaluated on a series; errors if den vanishes identically on it.
PuiseuxSeries rational_eval_series(const QPoly& num, const QPoly& den, const PuiseuxSeries& s,
                                   const Rational& budget);

/// z*phi(1/z) for a tuple of series with nonnegative exponents: in the shared
/// representation this is a shift by -1 of each coordinate. Errors if some
/// phi has a negative exponent.
std::vector<PuiseuxSeries> substitute_z_inverse(const std::vector<PuiseuxSeries>& phi);

/// Terms of a branch series r(z) in the z view (descending z-exponents).
struct ZTerm {
    Rational z_exp;
    AlgNum coeff;
};
std::vector<ZTerm> z_terms(const PuiseuxSeries& r);

} // namespace curveasym

#endif
