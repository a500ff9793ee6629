#ifndef CURVEASYM_QPOLY_HPP
#define CURVEASYM_QPOLY_HPP

#include <utility>
#include <vector>

#include "curveasym/rational.hpp"

namespace curveasym {

/// Dense univariate polynomial over the rationals, coefficients low to high.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(Rational c) { coeffs_.push_back(std::move(c)); normalize(); }
    explicit QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static QPoly zero() { return QPoly(); }
    static QPoly one() { return QPoly(Rational(1)); }
    static QPoly x() { return QPoly(std::vector<Rational>{Rational(0), Rational(1)}); }
    static QPoly monomial(const Rational& c, int deg);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& leading() const;
    const Rational& operator[](int i) const;
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    QPoly operator-() const;
    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator*(const Rational& c) const;
    bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }

    // Field division: q, r with *this = q*d + r, deg r < deg d.
    std::pair<QPoly, QPoly> divrem(const QPoly& d) const;
    QPoly derivative() const;
    Rational eval(const Rational& x) const;
    // Evaluation at a complex rational point (re, im); returns (re, im).
    std::pair<Rational, Rational> eval_complex(const Rational& re, const Rational& im) const;

    QPoly monic() const;
    QPoly compose(const QPoly& inner) const;
    // p(c*x) and p(x + c).
    QPoly scale_arg(const Rational& c) const;
    QPoly shift_arg(const Rational& c) const;
    // x^deg * p(1/x).
    QPoly reverse() const;

    // Primitive integer-coefficient multiple with positive leading coefficient.
    QPoly primitive() const;
    std::string str(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

QPoly qpoly_gcd(const QPoly& a, const QPoly& b);
QPoly qpoly_squarefree_part(const QPoly& p);
// Yun decomposition: list of (squarefree factor, multiplicity), nontrivial factors only.
std::vector<std::pair<QPoly, int>> qpoly_squarefree_decomposition(const QPoly& p);

// Number of real roots in the open interval (a, b); p squarefree, p(a), p(b) != 0.
int sturm_count(const QPoly& p, const Rational& a, const Rational& b);

} // namespace curveasym

#endif
