#include "curveasym/box.hpp"

#include <algorithm>
#include <sstream>

namespace curveasym {

RatInterval RatInterval::operator*(const RatInterval& o) const {
    Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    Rational mn = std::min(std::min(a, b), std::min(c, d));
    Rational mx = std::max(std::max(a, b), std::max(c, d));
    return {mn, mx};
}

RatInterval RatInterval::operator*(const Rational& c) const {
    if (c >= 0)
        return {lo * c, hi * c};
    return {hi * c, lo * c};
}

Rational RatInterval::abs_hi() const {
    Rational a = lo < 0 ? Rational(-lo) : lo;
    Rational b = hi < 0 ? Rational(-hi) : hi;
    return std::max(a, b);
}

Rational RatInterval::abs_lo() const {
    if (contains_zero())
        return Rational(0);
    Rational a = lo < 0 ? Rational(-lo) : lo;
    Rational b = hi < 0 ? Rational(-hi) : hi;
    return std::min(a, b);
}

Box Box::operator*(const Box& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
}

Box Box::inverse() const {
    if (contains_zero())
        throw Error("interval reciprocal through zero");
    // 1/(a+bi) = (a - bi) / (a^2 + b^2)
    RatInterval n = re * re + im * im;
    if (n.lo <= 0)
        throw Error("interval reciprocal through zero");
    RatInterval inv_n(Rational(1) / n.hi, Rational(1) / n.lo);
    return {re * inv_n, (-im) * inv_n};
}

Box Box::pow(int e) const {
    if (e < 0)
        return inverse().pow(-e);
    Box acc = Box::point(Rational(1), Rational(0));
    Box base = *this;
    while (e > 0) {
        if (e & 1)
            acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Rational Box::abs2_hi() const {
    Rational a = re.abs_hi(), b = im.abs_hi();
    return a * a + b * b;
}

Rational Box::abs2_lo() const {
    Rational a = re.abs_lo(), b = im.abs_lo();
    return a * a + b * b;
}

std::string Box::str() const {
    std::ostringstream os;
    os << re.lo.get_str() << ".." << re.hi.get_str() << ", " << im.lo.get_str() << ".."
       << im.hi.get_str();
    return os.str();
}

Box intersect(const Box& a, const Box& b) {
    if (!a.intersects(b))
        throw Error("empty box intersection");
    return {RatInterval(std::max(a.re.lo, b.re.lo), std::min(a.re.hi, b.re.hi)),
            RatInterval(std::max(a.im.lo, b.im.lo), std::min(a.im.hi, b.im.hi))};
}

} // namespace curveasym
