#ifndef CURVEASYM_ALGNUM_HPP
#define CURVEASYM_ALGNUM_HPP

#include <optional>

#include "curveasym/numberfield.hpp"

namespace curveasym {

/// Exact algebraic number: a squarefree primitive integer polynomial plus a
/// complex box isolating exactly one of its roots. Values produced by the
/// series machinery additionally carry a number-field representation, which
/// keeps arithmetic chains degree-stable; arithmetic between unrelated values
/// falls back to resultant composition on the defining polynomials.
class AlgNum {
public:
    AlgNum() : nf_(NFElem(Rational(0))) {}
    explicit AlgNum(Rational r) : nf_(NFElem(std::move(r))) {}
    explicit AlgNum(long n) : nf_(NFElem(Rational(n))) {}
    explicit AlgNum(NFElem e) : nf_(std::move(e)) {}
    /// Raw exchange form. The box must isolate exactly one root.
    AlgNum(QPoly defining, Box isolating);

    bool is_rational() const { return nf_ && nf_->is_rational_form(); }
    const Rational& rational_value() const;
    const NFElem* nf() const { return nf_ ? &*nf_ : nullptr; }

    bool is_zero() const;
    bool is_one() const;
    bool is_real() const;

    AlgNum operator-() const;
    AlgNum operator+(const AlgNum& o) const;
    AlgNum operator-(const AlgNum& o) const;
    AlgNum operator*(const AlgNum& o) const;
    AlgNum operator/(const AlgNum& o) const;
    AlgNum inverse() const;
    AlgNum pow(long e) const;
    AlgNum conj() const;

    const QPoly& defining() const; // materialized on demand
    const Box& box() const;
    Box enclosure(const Rational& max_side) const;
    BigComplex approx(long prec) const;

    /// e^(2*pi*i*k/n) as an exact value (root of x^n - 1).
    static AlgNum root_of_unity(long n, long k);

private:
    void ensure_export() const;
    mutable std::optional<NFElem> nf_;
    mutable std::optional<QPoly> def_;
    mutable std::optional<Box> box_;
};

/// Exact equality of values (never by floating comparison alone).
bool alg_equal(const AlgNum& a, const AlgNum& b);
/// Total order: lexicographic on (Re, Im). Returns -1, 0, or 1.
int alg_compare(const AlgNum& a, const AlgNum& b);

} // namespace curveasym

#endif
