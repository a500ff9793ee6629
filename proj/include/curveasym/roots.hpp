#ifndef CURVEASYM_ROOTS_HPP
#define CURVEASYM_ROOTS_HPP

#include <optional>
#include <vector>

#include "curveasym/box.hpp"
#include "curveasym/qpoly.hpp"

namespace curveasym {

struct IsolatedRoot {
    Box box;             // exactly one root of the polynomial in this closed box
    Rational approx_re;  // dyadic approximation of the root
    Rational approx_im;
};

/// Certified isolation of all complex roots of a squarefree polynomial.
/// Boxes are pairwise disjoint, each contains exactly one root, and together
/// they cover every root. Deterministic order (by approximation, re then im).
std::vector<IsolatedRoot> isolate_roots(const QPoly& squarefree, long prec = 128);

/// Cached, refinable isolation. `designating` must isolate exactly one root of
/// p; the result is a sub-box of it of side at most `target_width`.
Box refine_root_box(const QPoly& squarefree, const Box& designating, const Rational& target_width);

/// The cached roots of p intersecting `target`, refined until every cached box
/// is either inside or disjoint from `target`. Used to count roots in a region.
std::vector<IsolatedRoot> roots_inside(const QPoly& squarefree, const Box& target);

/// Dyadic approximation of the root of p designated by `box`.
std::pair<Rational, Rational> root_approx(const QPoly& squarefree, const Box& box,
                                          const Rational& target_width);

/// Aberth-Ehrlich approximations for a dense complex polynomial given by
/// exact (dyadic) coefficient midpoints, low to high. Returns deg-many dyadic
/// approximations. No certification; callers certify separately.
std::vector<std::pair<Rational, Rational>> aberth_approximate(
    const std::vector<std::pair<Rational, Rational>>& coeffs, long prec);

/// Dyadic upper bound on sqrt(q), q >= 0.
Rational sqrt_upper_bound(const Rational& q);

} // namespace curveasym

#endif
