#ifndef CURVEASYM_NUMBERFIELD_HPP
#define CURVEASYM_NUMBERFIELD_HPP

#include <memory>
#include <vector>

#include "curveasym/bigfloat.hpp"
#include "curveasym/box.hpp"
#include "curveasym/mpoly.hpp"
#include "curveasym/qpoly.hpp"

namespace curveasym {

class NumberField;
using FieldPtr = std::shared_ptr<NumberField>;

/// Element of a tower extension of Q (rational when fld() is null).
///
/// Fields are etale algebras Q[g]/(m): the defining polynomial is squarefree
/// but not necessarily irreducible. A certified box designates which root the
/// generator denotes. Zero tests and inversions follow the D5 discipline:
/// when a zero divisor shows up, the defining polynomial is shrunk to the
/// factor carrying the designated root and the computation is retried.
class NFElem {
public:
    NFElem() : rat_(0) {}
    explicit NFElem(Rational r) : rat_(std::move(r)) {}
    NFElem(FieldPtr fld, std::vector<NFElem> coeffs);

    const FieldPtr& fld() const { return fld_; }
    bool is_rational_form() const { return fld_ == nullptr; }
    const Rational& rational_value() const;
    const std::vector<NFElem>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;

    NFElem operator-() const;
    NFElem operator+(const NFElem& o) const;
    NFElem operator-(const NFElem& o) const;
    NFElem operator*(const NFElem& o) const;
    NFElem operator*(const Rational& c) const;
    NFElem inverse() const;
    NFElem operator/(const NFElem& o) const { return *this * o.inverse(); }
    NFElem pow(long e) const;

    /// Embed into `target`, which must be this element's field or an
    /// extension of it.
    NFElem lift_to(const FieldPtr& target) const;

    /// Rigorous enclosure of the value (sides at most max_side).
    Box enclosure(const Rational& max_side) const;
    BigComplex approx(long prec) const;
    /// The element as a polynomial in the tower generators.
    MPoly to_mpoly(const std::vector<std::string>& vars) const;

private:
    void reduce();
    friend class NumberField;
    FieldPtr fld_;     // null => rational
    Rational rat_;     // value when rational
    std::vector<NFElem> coeffs_; // over fld_->base(), low to high; empty => 0
};

using NFPoly = std::vector<NFElem>; // dense univariate, low to high

class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    /// Extension of Q by one root of a squarefree rational polynomial.
    static FieldPtr make(const QPoly& squarefree, const Box& designating);
    /// Extension of `base` by one root of a polynomial over base; the
    /// polynomial is squarefree-reduced over the designated component first.
    static FieldPtr make(const FieldPtr& base, NFPoly minpoly, const Box& designating);

    const FieldPtr& base() const { return base_; }
    int depth() const { return depth_; }
    int deg() const { return static_cast<int>(minpoly_.size()) - 1; }
    const NFPoly& minpoly() const { return minpoly_; }
    NFElem gen();

    /// Rigorous enclosure of the designated generator root.
    Box gen_enclosure(const Rational& max_side);

    /// D5 split: given a monic proper factor of the current defining
    /// polynomial, keep whichever of factor/cofactor carries the designated
    /// root. Values of existing elements are unchanged. Returns true when the
    /// designated root lies in the factor.
    bool shrink_to_component(const NFPoly& monic_factor);

private:
    NumberField() = default;
    void sync_rational_minpoly();
    FieldPtr base_;
    NFPoly minpoly_; // monic over base_
    Box gen_box_;
    int depth_ = 1;
    QPoly rational_minpoly_; // depth-1 fast path
};

// Polynomial helpers over a tower field (dense coefficient vectors).
int nfp_degree(const NFPoly& p); // zero-divisor-aware (exact leading trim)
NFPoly nfp_trim(NFPoly p);
NFPoly nfp_add(const NFPoly& a, const NFPoly& b);
NFPoly nfp_sub(const NFPoly& a, const NFPoly& b);
NFPoly nfp_mul(const NFPoly& a, const NFPoly& b);
NFPoly nfp_scale(const NFPoly& a, const NFElem& c);
NFPoly nfp_monic(const NFPoly& a);
std::pair<NFPoly, NFPoly> nfp_divrem(const NFPoly& a, const NFPoly& b);
NFPoly nfp_gcd_monic(const NFPoly& a, const NFPoly& b);
NFPoly nfp_derivative(const NFPoly& a);
NFElem nfp_eval(const NFPoly& a, const NFElem& x);
NFPoly nfp_from_qpoly(const QPoly& p);

/// Squarefree decomposition over the designated component.
std::vector<std::pair<NFPoly, int>> nfp_squarefree_decomposition(const NFPoly& p);

struct FieldRoot {
    FieldPtr field;   // field containing the root (may equal the input field)
    NFElem value;
    int multiplicity;
};

/// All roots of a polynomial with coefficients in `fld` (or rational), each in
/// a suitable extension. Deterministic order.
std::vector<FieldRoot> nf_roots(const FieldPtr& fld, const NFPoly& p);

/// Certified pairwise-disjoint enclosures of all roots of a squarefree
/// polynomial with tower coefficients.
std::vector<Box> isolate_tower_poly_roots(const NFPoly& monic_squarefree);

/// Squarefree primitive rational polynomial vanishing at the element, plus an
/// isolating box (the exchange representation).
std::pair<QPoly, Box> nf_export(const NFElem& e);

} // namespace curveasym

#endif
