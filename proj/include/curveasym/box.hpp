#ifndef CURVEASYM_BOX_HPP
#define CURVEASYM_BOX_HPP

#include <string>

#include "curveasym/rational.hpp"

namespace curveasym {

/// Closed rational interval [lo, hi].
struct RatInterval {
    Rational lo, hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi)
            throw Error("interval endpoints out of order");
    }
    static RatInterval point(const Rational& v) { return RatInterval(v, v); }

    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
    bool intersects(const RatInterval& o) const { return !(hi < o.lo || o.hi < lo); }
    bool contains_interval(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }
    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }

    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    RatInterval operator-() const { return {-hi, -lo}; }
    RatInterval operator*(const RatInterval& o) const;
    RatInterval operator*(const Rational& c) const;
    // Magnitude bounds |x| for x in the interval.
    Rational abs_hi() const;
    Rational abs_lo() const;
};

/// Closed complex rectangle with rational corners.
struct Box {
    RatInterval re, im;

    Box() = default;
    Box(RatInterval r, RatInterval i) : re(std::move(r)), im(std::move(i)) {}
    static Box point(const Rational& r, const Rational& i) {
        return Box(RatInterval::point(r), RatInterval::point(i));
    }

    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    bool contains_point(const Rational& r, const Rational& i) const {
        return re.contains(r) && im.contains(i);
    }
    bool intersects(const Box& o) const { return re.intersects(o.re) && im.intersects(o.im); }
    bool contains_box(const Box& o) const {
        return re.contains_interval(o.re) && im.contains_interval(o.im);
    }
    Rational max_side() const { return std::max(re.width(), im.width()); }

    Box operator+(const Box& o) const { return {re + o.re, im + o.im}; }
    Box operator-(const Box& o) const { return {re - o.re, im - o.im}; }
    Box operator-() const { return {-re, -im}; }
    Box operator*(const Box& o) const;
    Box operator*(const Rational& c) const { return {re * c, im * c}; }
    Box conj() const { return {re, -im}; }
    /// Reciprocal; requires the box to exclude zero.
    Box inverse() const;
    Box pow(int e) const;
    /// Upper bound on |z|^2 over the box.
    Rational abs2_hi() const;
    /// Lower bound on |z|^2 over the box.
    Rational abs2_lo() const;

    std::string str() const;
};

Box intersect(const Box& a, const Box& b);

} // namespace curveasym

#endif
