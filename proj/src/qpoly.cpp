#include "curveasym/qpoly.hpp"

#include <sstream>

namespace curveasym {

void QPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

QPoly QPoly::monomial(const Rational& c, int deg) {
    if (c == 0)
        return QPoly();
    std::vector<Rational> v(deg + 1, Rational(0));
    v[deg] = c;
    return QPoly(std::move(v));
}

const Rational& QPoly::leading() const {
    if (coeffs_.empty())
        throw Error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

const Rational& QPoly::operator[](int i) const {
    static const Rational z(0);
    if (i < 0 || i >= static_cast<int>(coeffs_.size()))
        return z;
    return coeffs_[i];
}

Rational QPoly::coeff(int i) const { return (*this)[i]; }

QPoly QPoly::operator-() const {
    QPoly r(*this);
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero())
        return QPoly();
    std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * o.coeffs_[j];
    return QPoly(std::move(v));
}

QPoly QPoly::operator*(const Rational& c) const {
    if (c == 0)
        return QPoly();
    QPoly r(*this);
    for (auto& a : r.coeffs_)
        a *= c;
    return r;
}

std::pair<QPoly, QPoly> QPoly::divrem(const QPoly& d) const {
    if (d.is_zero())
        throw Error("division by zero polynomial");
    QPoly r(*this);
    std::vector<Rational> q(std::max<int>(0, degree() - d.degree() + 1), Rational(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        Rational c = r.leading() / d.leading();
        int k = r.degree() - d.degree();
        q[k] = c;
        r = r - QPoly::monomial(c, k) * d;
    }
    return {QPoly(std::move(q)), r};
}

QPoly QPoly::derivative() const {
    if (coeffs_.size() <= 1)
        return QPoly();
    std::vector<Rational> v(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i)
        v[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return QPoly(std::move(v));
}

Rational QPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::pair<Rational, Rational> QPoly::eval_complex(const Rational& re, const Rational& im) const {
    Rational ar(0), ai(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        Rational nr = ar * re - ai * im + *it;
        Rational ni = ar * im + ai * re;
        ar = std::move(nr);
        ai = std::move(ni);
    }
    return {ar, ai};
}

QPoly QPoly::monic() const {
    if (is_zero())
        return *this;
    return *this * (Rational(1) / leading());
}

QPoly QPoly::compose(const QPoly& inner) const {
    QPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * inner + QPoly(*it);
    return acc;
}

QPoly QPoly::scale_arg(const Rational& c) const {
    QPoly r(*this);
    Rational f(1);
    for (size_t i = 0; i < r.coeffs_.size(); ++i) {
        r.coeffs_[i] *= f;
        f *= c;
    }
    r.normalize();
    return r;
}

QPoly QPoly::shift_arg(const Rational& c) const {
    return compose(QPoly(std::vector<Rational>{c, Rational(1)}));
}

QPoly QPoly::reverse() const {
    std::vector<Rational> v(coeffs_.rbegin(), coeffs_.rend());
    return QPoly(std::move(v));
}

QPoly QPoly::primitive() const {
    if (is_zero())
        return *this;
    Integer den(1);
    for (const auto& c : coeffs_)
        den = int_lcm(den, c.get_den());
    Integer num(0);
    for (const auto& c : coeffs_)
        num = int_gcd(num, Integer(c.get_num() * (den / c.get_den())));
    Rational f = make_rational(den, num);
    if (leading() < 0)
        f = -f;
    return *this * f;
}

std::string QPoly::str(const std::string& var) const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = (*this)[i];
        if (c == 0)
            continue;
        Rational a = c > 0 ? c : Rational(-c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        bool unit = (a == 1) && i > 0;
        if (!unit)
            os << a.get_str();
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

QPoly qpoly_gcd(const QPoly& a, const QPoly& b) {
    QPoly f = a, g = b;
    while (!g.is_zero()) {
        QPoly r = f.divrem(g).second;
        f = std::move(g);
        g = std::move(r);
    }
    if (f.is_zero())
        return f;
    return f.monic();
}

QPoly qpoly_squarefree_part(const QPoly& p) {
    if (p.is_zero() || p.degree() == 0)
        return p;
    QPoly g = qpoly_gcd(p, p.derivative());
    if (g.degree() == 0)
        return p;
    return p.divrem(g).first;
}

std::vector<std::pair<QPoly, int>> qpoly_squarefree_decomposition(const QPoly& p) {
    std::vector<std::pair<QPoly, int>> out;
    if (p.is_zero() || p.degree() == 0)
        return out;
    // Yun's algorithm.
    QPoly a = p, d = p.derivative();
    QPoly g = qpoly_gcd(a, d);
    QPoly b = a.divrem(g).first;
    QPoly c = d.divrem(g).first;
    QPoly z = c - b.derivative();
    int k = 1;
    while (!(b.degree() == 0)) {
        QPoly f = qpoly_gcd(b, z);
        if (f.degree() > 0)
            out.emplace_back(f.monic(), k);
        b = b.divrem(f).first;
        z = z.divrem(f).first - b.derivative();
        ++k;
    }
    return out;
}

namespace {

int sign_of(const Rational& q) {
    return q > 0 ? 1 : (q < 0 ? -1 : 0);
}

int sign_variations(const QPoly& p, const Rational& x, const std::vector<QPoly>& chain) {
    int count = 0, prev = 0;
    (void)p;
    for (const auto& f : chain) {
        int s = sign_of(f.eval(x));
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++count;
        prev = s;
    }
    return count;
}

} // namespace

int sturm_count(const QPoly& p, const Rational& a, const Rational& b) {
    if (p.is_zero())
        throw Error("sturm_count on zero polynomial");
    std::vector<QPoly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        const QPoly& s = chain[chain.size() - 2];
        const QPoly& t = chain.back();
        chain.push_back(-(s.divrem(t).second));
    }
    chain.pop_back();
    return sign_variations(p, a, chain) - sign_variations(p, b, chain);
}

} // namespace curveasym
