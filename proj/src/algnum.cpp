#include "curveasym/algnum.hpp"

#include <functional>

#include "curveasym/roots.hpp"

namespace curveasym {

namespace {

Rational pow2_inv(long k) {
    Integer d(1);
    mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), k);
    return make_rational(1, d);
}

bool chain_compatible(const FieldPtr& a, const FieldPtr& b) {
    if (!a || !b)
        return true;
    for (FieldPtr f = a; f; f = f->base())
        if (f == b)
            return true;
    for (FieldPtr f = b; f; f = f->base())
        if (f == a)
            return true;
    return false;
}

// Lower bound on |root| over the nonzero roots of q (q(0) != 0): the classic
// bound |root| >= |q_0| / (|q_0| + max_i |q_i|).
Rational nonzero_root_lower_bound(const QPoly& q) {
    Rational q0 = q[0] < 0 ? Rational(-q[0]) : q[0];
    Rational m(0);
    for (int i = 1; i <= q.degree(); ++i) {
        Rational a = q[i] < 0 ? Rational(-q[i]) : q[i];
        if (a > m)
            m = a;
    }
    return q0 / (q0 + m);
}

} // namespace

AlgNum::AlgNum(QPoly defining, Box isolating) {
    QPoly def = qpoly_squarefree_part(defining).primitive();
    if (def.degree() < 1)
        throw Error("defining polynomial must have positive degree");
    if (def.degree() == 1) {
        nf_ = NFElem(-def[0] / def[1]);
        return;
    }
    def_ = std::move(def);
    box_ = std::move(isolating);
}

const Rational& AlgNum::rational_value() const {
    if (!is_rational())
        throw Error("not a rational value");
    return nf_->rational_value();
}

void AlgNum::ensure_export() const {
    if (def_)
        return;
    auto [d, b] = nf_export(*nf_);
    def_ = std::move(d);
    box_ = std::move(b);
}

const QPoly& AlgNum::defining() const {
    ensure_export();
    return *def_;
}

const Box& AlgNum::box() const {
    ensure_export();
    return *box_;
}

Box AlgNum::enclosure(const Rational& max_side) const {
    if (nf_)
        return nf_->enclosure(max_side);
    if (box_->max_side() <= max_side)
        return *box_;
    box_ = refine_root_box(*def_, *box_, max_side);
    return *box_;
}

BigComplex AlgNum::approx(long prec) const {
    Box b = enclosure(pow2_inv(prec));
    return BigComplex::from(b.re.mid(), b.im.mid(), prec + 32);
}

bool AlgNum::is_zero() const {
    if (nf_)
        return nf_->is_zero();
    // The value is a root of the defining polynomial.
    if ((*def_)[0] != 0)
        return false;
    QPoly q = def_->divrem(QPoly::x()).first; // def = x * q, q(0) != 0
    Rational lb = nonzero_root_lower_bound(q);
    Rational lb2 = lb * lb;
    Rational w = pow2_inv(8);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Box b = enclosure(w);
        if (!b.contains_zero())
            return false;
        if (b.abs2_hi() < lb2)
            return true;
        w = w / 64;
    }
    throw Error("zero test did not converge");
}

bool AlgNum::is_one() const { return alg_equal(*this, AlgNum(Rational(1))); }

bool AlgNum::is_real() const {
    if (is_rational())
        return true;
    const QPoly& p = defining();
    Rational w = pow2_inv(16);
    Box b = enclosure(w);
    if (!b.im.contains_zero())
        return false;
    // A real root of p inside the real range lies in the box, and the box
    // isolates exactly one root; so the value is real iff such a root exists.
    if (p.eval(b.re.lo) == 0 || p.eval(b.re.hi) == 0)
        return true;
    return sturm_count(p, b.re.lo, b.re.hi) >= 1;
}

AlgNum AlgNum::operator-() const {
    if (nf_)
        return AlgNum(-*nf_);
    QPoly def = def_->scale_arg(Rational(-1));
    AlgNum r;
    r.nf_.reset();
    r.def_ = def.primitive();
    r.box_ = -*box_;
    return r;
}

AlgNum AlgNum::conj() const {
    if (is_rational())
        return *this;
    if (is_real())
        return *this;
    AlgNum r;
    r.nf_.reset();
    r.def_ = defining();
    r.box_ = box().conj();
    return r;
}

namespace {

// Resultant-composition helper: isolate the root of `def_raw` designated by a
// shrinking interval-arithmetic enclosure of the result.
AlgNum designate(QPoly def_raw, const std::function<std::optional<Box>(const Rational&)>& opbox) {
    QPoly def = qpoly_squarefree_part(def_raw).primitive();
    if (def.degree() < 1)
        throw Error("degenerate composed polynomial");
    Rational w = pow2_inv(12);
    for (int attempt = 0; attempt < 48; ++attempt) {
        auto b = opbox(w);
        if (b) {
            try {
                auto inside = roots_inside(def, *b);
                if (inside.size() == 1)
                    return AlgNum(def, inside[0].box);
            } catch (const Error&) {
                // root straddling the box boundary; shrink further
            }
        }
        w = w / 64;
    }
    throw Error("composed value designation did not converge");
}

MPoly qpoly_as_mpoly(const QPoly& p, const std::vector<std::string>& vars, int var) {
    return MPoly::from_qpoly(p, vars, var);
}

} // namespace

AlgNum AlgNum::operator+(const AlgNum& o) const {
    if (nf_ && o.nf_ && chain_compatible(nf_->fld(), o.nf_->fld()))
        return AlgNum(*nf_ + *o.nf_);
    if (is_rational() && o.is_rational())
        return AlgNum(rational_value() + o.rational_value());
    const QPoly& pa = defining();
    const QPoly& pb = o.defining();
    // Res_x(pa(x), pb(s - x)) vanishes at s = a + b.
    std::vector<std::string> vars{"@x", "@s"};
    MPoly A = qpoly_as_mpoly(pa, vars, 0);
    MPoly arg = MPoly::variable(vars, 1) - MPoly::variable(vars, 0);
    MPoly B(vars);
    for (int k = pb.degree(); k >= 0; --k)
        B = B * arg + MPoly::constant(vars, pb[k]);
    QPoly composed = resultant(A, B, 0).to_qpoly();
    const AlgNum* self = this;
    return designate(composed, [self, &o](const Rational& w) -> std::optional<Box> {
        return self->enclosure(w) + o.enclosure(w);
    });
}

AlgNum AlgNum::operator-(const AlgNum& o) const { return *this + (-o); }

AlgNum AlgNum::operator*(const AlgNum& o) const {
    if (nf_ && o.nf_ && chain_compatible(nf_->fld(), o.nf_->fld()))
        return AlgNum(*nf_ * *o.nf_);
    if (is_rational() && o.is_rational())
        return AlgNum(rational_value() * o.rational_value());
    if (is_rational() || o.is_rational()) {
        // Scaling by a rational keeps the degree: p(x/c).
        const AlgNum& alg = is_rational() ? o : *this;
        const Rational& c = is_rational() ? rational_value() : o.rational_value();
        if (c == 0)
            return AlgNum(Rational(0));
        QPoly def = alg.defining().scale_arg(Rational(1) / c);
        AlgNum r;
        r.nf_.reset();
        r.def_ = def.primitive();
        r.box_ = alg.box() * c;
        return r;
    }
    const QPoly& pa = defining();
    const QPoly& pb = o.defining();
    // Res_x(pa(x), x^db * pb(s/x)) vanishes at s = a*b.
    std::vector<std::string> vars{"@x", "@s"};
    MPoly A = qpoly_as_mpoly(pa, vars, 0);
    MPoly B(vars);
    int db = pb.degree();
    for (int k = 0; k <= db; ++k) {
        if (pb[k] == 0)
            continue;
        MPoly term = MPoly::constant(vars, pb[k]) * MPoly::variable(vars, 1).pow(k) *
                     MPoly::variable(vars, 0).pow(db - k);
        B = B + term;
    }
    QPoly composed = resultant(A, B, 0).to_qpoly();
    const AlgNum* self = this;
    return designate(composed, [self, &o](const Rational& w) -> std::optional<Box> {
        return self->enclosure(w) * o.enclosure(w);
    });
}

AlgNum AlgNum::inverse() const {
    if (is_zero())
        throw Error("division by zero");
    if (nf_)
        return AlgNum(nf_->inverse());
    QPoly rev = defining().reverse();
    const AlgNum* self = this;
    return designate(rev, [self](const Rational& w) -> std::optional<Box> {
        Box b = self->enclosure(w);
        if (b.contains_zero())
            return std::nullopt;
        return b.inverse();
    });
}

AlgNum AlgNum::operator/(const AlgNum& o) const {
    if (nf_ && o.nf_ && chain_compatible(nf_->fld(), o.nf_->fld()))
        return AlgNum(*nf_ / *o.nf_);
    return *this * o.inverse();
}

AlgNum AlgNum::pow(long e) const {
    if (e < 0)
        return inverse().pow(-e);
    if (nf_)
        return AlgNum(nf_->pow(e));
    AlgNum acc(Rational(1));
    AlgNum base = *this;
    while (e > 0) {
        if (e & 1)
            acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

AlgNum AlgNum::root_of_unity(long n, long k) {
    if (n < 1)
        throw Error("root of unity order must be positive");
    k = ((k % n) + n) % n;
    if (k == 0)
        return AlgNum(Rational(1));
    if (2 * k == n)
        return AlgNum(Rational(-1));
    std::vector<Rational> cs(n + 1, Rational(0));
    cs[0] = Rational(-1);
    cs[n] = Rational(1);
    QPoly def(cs);
    // Certified designation: the n-th roots of unity are at least 2*sin(pi/n)
    // > 4/n apart; a box of half-width 1/(4n) around a 1/(8n)-accurate
    // approximation contains exactly one of them.
    long prec = 64 + 8 * n;
    BigFloat theta = BigFloat::pi(prec) * BigFloat::from(Rational(2 * k, n), prec);
    Rational cr = theta.cos().to_rational();
    Rational ci = theta.sin().to_rational();
    Rational hw(1, 4 * n);
    Box b(RatInterval(cr - hw, cr + hw), RatInterval(ci - hw, ci + hw));
    return AlgNum(def, b);
}

bool alg_equal(const AlgNum& a, const AlgNum& b) {
    if (a.is_rational() && b.is_rational())
        return a.rational_value() == b.rational_value();
    if (a.nf() && b.nf() && chain_compatible(a.nf()->fld(), b.nf()->fld()))
        return (*a.nf() - *b.nf()).is_zero();
    // Cheap separation first.
    Box ba = a.enclosure(Rational(1, 1024));
    Box bb = b.enclosure(Rational(1, 1024));
    if (!ba.intersects(bb))
        return false;
    // Common roots lie in gcd(defining_a, defining_b).
    QPoly g = qpoly_gcd(a.defining(), b.defining());
    if (g.degree() == 0)
        return false;
    return (a - b).is_zero();
}

int alg_compare(const AlgNum& a, const AlgNum& b) {
    if (a.is_rational() && b.is_rational()) {
        const Rational &x = a.rational_value(), &y = b.rational_value();
        return x < y ? -1 : (x > y ? 1 : 0);
    }
    if (alg_equal(a, b))
        return 0;
    Rational w(1, 1024);
    for (int attempt = 0; attempt < 24; ++attempt) {
        Box ba = a.enclosure(w);
        Box bb = b.enclosure(w);
        if (ba.re.hi < bb.re.lo)
            return -1;
        if (bb.re.hi < ba.re.lo)
            return 1;
        if (!ba.re.intersects(bb.re))
            break;
        // Real parts may be exactly equal; then the imaginary parts differ.
        if (ba.im.hi < bb.im.lo && alg_equal(a + a.conj(), b + b.conj()))
            return -1;
        if (bb.im.hi < ba.im.lo && alg_equal(a + a.conj(), b + b.conj()))
            return 1;
        w = w / 256;
    }
    throw Error("algebraic comparison did not converge");
}

} // namespace curveasym
