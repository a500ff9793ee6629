#include "curveasym/numberfield.hpp"

#include <algorithm>
#include <optional>

#include "curveasym/roots.hpp"

namespace curveasym {

namespace {

bool rep_zero(const NFElem& e) {
    return e.is_rational_form() ? e.rational_value() == 0 : e.coeffs().empty();
}

// Interval Horner over tower coefficients.
Box nfp_enclosure_at(const NFPoly& p, const Box& x, const Rational& coeff_width) {
    Box acc = Box::point(Rational(0), Rational(0));
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * x + it->enclosure(coeff_width);
    return acc;
}

Rational pow2_inv(long k) {
    Integer d(1);
    mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), k);
    return make_rational(1, d);
}

// Small-height rational near a dyadic approximation, via continued fractions.
std::optional<Rational> rational_snap(const Rational& approx, const Rational& tol) {
    Rational x = approx;
    Integer p0(1), q0(0), p1 = rat_floor(x), q1(1);
    Rational frac = x - Rational(p1);
    for (int i = 0; i < 64; ++i) {
        Rational cand = make_rational(p1, q1);
        Rational err = cand - approx;
        if (err < 0)
            err = -err;
        if (err <= tol)
            return cand;
        if (frac == 0)
            break;
        x = Rational(1) / frac;
        Integer a = rat_floor(x);
        frac = x - Rational(a);
        Integer p2 = a * p1 + p0, q2 = a * q1 + q0;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        if (q1 > Integer(1) << 48)
            break;
    }
    return std::nullopt;
}

} // namespace

// ---------------------------------------------------------------------------
// NFElem
// ---------------------------------------------------------------------------

NFElem::NFElem(FieldPtr fld, std::vector<NFElem> coeffs)
    : fld_(std::move(fld)), rat_(0), coeffs_(std::move(coeffs)) {
    if (!fld_)
        throw Error("NFElem: null field");
    reduce();
}

const Rational& NFElem::rational_value() const {
    if (fld_)
        throw Error("not in rational form");
    return rat_;
}

void NFElem::reduce() {
    if (!fld_)
        return;
    const NFPoly& m = fld_->minpoly();
    size_t d = m.size() - 1;
    while (coeffs_.size() > d) {
        NFElem top = coeffs_.back();
        size_t k = coeffs_.size() - 1;
        coeffs_.pop_back();
        if (rep_zero(top))
            continue;
        // subtract top * x^(k-d) * minpoly (monic), cancelling the top term
        for (size_t i = 0; i < d; ++i) {
            size_t pos = k - d + i;
            coeffs_[pos] = coeffs_[pos] - top * m[i];
        }
    }
    while (!coeffs_.empty() && rep_zero(coeffs_.back()))
        coeffs_.pop_back();
}

NFElem NFElem::lift_to(const FieldPtr& target) const {
    if (fld_ == target)
        return *this;
    if (!target)
        throw Error("cannot lower field element to the rationals");
    // Walk down from target to this element's field.
    std::vector<FieldPtr> chain;
    FieldPtr f = target;
    while (f && f != fld_) {
        chain.push_back(f);
        f = f->base();
    }
    if (f != fld_)
        throw Error("field mismatch in tower lift");
    NFElem e = *this;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        e = NFElem(*it, std::vector<NFElem>{e});
    return e;
}

NFElem NFElem::operator-() const {
    if (!fld_)
        return NFElem(Rational(-rat_));
    NFElem r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

NFElem NFElem::operator+(const NFElem& o) const {
    if (!fld_ && !o.fld_)
        return NFElem(Rational(rat_ + o.rat_));
    if (fld_ != o.fld_) {
        if (!fld_)
            return lift_to(o.fld_) + o;
        if (!o.fld_)
            return *this + o.lift_to(fld_);
        if (fld_->depth() < o.fld_->depth())
            return lift_to(o.fld_) + o;
        return *this + o.lift_to(fld_);
    }
    NFElem r = *this;
    if (r.coeffs_.size() < o.coeffs_.size())
        r.coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        r.coeffs_[i] = r.coeffs_[i] + o.coeffs_[i];
    r.reduce();
    return r;
}

NFElem NFElem::operator-(const NFElem& o) const { return *this + (-o); }

NFElem NFElem::operator*(const NFElem& o) const {
    if (!fld_ && !o.fld_)
        return NFElem(Rational(rat_ * o.rat_));
    if (fld_ != o.fld_) {
        if (!fld_)
            return lift_to(o.fld_) * o;
        if (!o.fld_)
            return *this * o.lift_to(fld_);
        if (fld_->depth() < o.fld_->depth())
            return lift_to(o.fld_) * o;
        return *this * o.lift_to(fld_);
    }
    if (coeffs_.empty() || o.coeffs_.empty())
        return NFElem(fld_, {});
    std::vector<NFElem> prod(coeffs_.size() + o.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            prod[i + j] = prod[i + j] + coeffs_[i] * o.coeffs_[j];
    return NFElem(fld_, std::move(prod));
}

NFElem NFElem::operator*(const Rational& c) const {
    return *this * NFElem(c);
}

NFElem NFElem::pow(long e) const {
    if (e < 0)
        return inverse().pow(-e);
    NFElem acc{Rational(1)};
    NFElem base = *this;
    while (e > 0) {
        if (e & 1)
            acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    if (fld_)
        acc = acc.lift_to(fld_);
    return acc;
}

bool NFElem::is_one() const { return (*this - NFElem(Rational(1))).is_zero(); }

bool NFElem::is_zero() const {
    if (!fld_)
        return rat_ == 0;
    NFElem t = *this;
    t.reduce();
    if (t.coeffs_.empty())
        return true;
    // Numeric prefilter.
    Box e = enclosure(pow2_inv(24));
    if (!e.contains_zero())
        return false;
    // Exact: common roots of the representative and the defining polynomial.
    for (int attempt = 0; attempt < 8; ++attempt) {
        NFPoly g = nfp_gcd_monic(t.coeffs_, fld_->minpoly());
        int dg = nfp_degree(g);
        int dm = nfp_degree(fld_->minpoly());
        if (dg <= 0)
            return false;
        if (dg == dm)
            return true;
        // Proper common factor: restrict the field to the component carrying
        // the designated root, then the answer is immediate.
        return fld_->shrink_to_component(g);
    }
    throw Error("zero test did not converge");
}

NFElem NFElem::inverse() const {
    if (!fld_) {
        if (rat_ == 0)
            throw Error("division by zero");
        return NFElem(Rational(1) / rat_);
    }
    if (is_zero())
        throw Error("division by zero field element");
    NFElem t = *this;
    t.reduce();
    for (int attempt = 0; attempt < 16; ++attempt) {
        // Extended Euclid of the representative and the defining polynomial.
        NFPoly r0 = fld_->minpoly(), r1 = t.coeffs_;
        NFPoly s0{}, s1{NFElem(Rational(1))}; // Bezout coefficients for t
        while (true) {
            int d1 = nfp_degree(r1);
            if (d1 < 0)
                throw Error("inverse: unexpected zero remainder");
            if (d1 == 0)
                break;
            auto [q, r2] = nfp_divrem(r0, r1);
            NFPoly s2 = nfp_sub(s0, nfp_mul(q, s1));
            r0 = std::move(r1);
            r1 = nfp_trim(std::move(r2));
            s0 = std::move(s1);
            s1 = std::move(s2);
            if (nfp_degree(r1) < 0) {
                // gcd has positive degree: split off the component.
                fld_->shrink_to_component(nfp_monic(r0));
                break;
            }
        }
        if (nfp_degree(r1) == 0) {
            NFElem unit = r1[0];
            NFPoly inv = nfp_scale(s1, unit.inverse());
            NFElem result(fld_, std::move(inv));
            return result;
        }
        t.reduce(); // field may have been shrunk; retry
    }
    throw Error("field inversion did not converge");
}

Box NFElem::enclosure(const Rational& max_side) const {
    if (!fld_)
        return Box::point(rat_, Rational(0));
    Rational gw = max_side / 4;
    for (int attempt = 0; attempt < 64; ++attempt) {
        Box gx = fld_->gen_enclosure(gw);
        Box acc = Box::point(Rational(0), Rational(0));
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * gx + it->enclosure(gw);
        if (acc.max_side() <= max_side)
            return acc;
        gw = gw / 16;
    }
    throw Error("element enclosure did not converge");
}

BigComplex NFElem::approx(long prec) const {
    Box b = enclosure(pow2_inv(prec));
    return BigComplex::from(b.re.mid(), b.im.mid(), prec + 32);
}

MPoly NFElem::to_mpoly(const std::vector<std::string>& vars) const {
    if (!fld_)
        return MPoly::constant(vars, rat_);
    int level = fld_->depth(); // generator variable index level-1
    MPoly x = MPoly::variable(vars, level - 1);
    MPoly acc(vars);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + it->to_mpoly(vars);
    return acc;
}

// ---------------------------------------------------------------------------
// NFPoly helpers
// ---------------------------------------------------------------------------

NFPoly nfp_trim(NFPoly p) {
    while (!p.empty() && rep_zero(p.back()))
        p.pop_back();
    return p;
}

int nfp_degree(const NFPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (!p[i].is_zero())
            return i;
    return -1;
}

NFPoly nfp_add(const NFPoly& a, const NFPoly& b) {
    NFPoly r = a;
    if (r.size() < b.size())
        r.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i)
        r[i] = r[i] + b[i];
    return nfp_trim(std::move(r));
}

NFPoly nfp_sub(const NFPoly& a, const NFPoly& b) {
    NFPoly nb = b;
    for (auto& c : nb)
        c = -c;
    return nfp_add(a, nb);
}

NFPoly nfp_mul(const NFPoly& a, const NFPoly& b) {
    if (a.empty() || b.empty())
        return {};
    NFPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = r[i + j] + a[i] * b[j];
    return nfp_trim(std::move(r));
}

NFPoly nfp_scale(const NFPoly& a, const NFElem& c) {
    NFPoly r = a;
    for (auto& x : r)
        x = x * c;
    return nfp_trim(std::move(r));
}

NFPoly nfp_monic(const NFPoly& a) {
    int d = nfp_degree(a);
    if (d < 0)
        throw Error("monic of zero polynomial");
    NFPoly t(a.begin(), a.begin() + d + 1);
    return nfp_scale(t, a[d].inverse());
}

std::pair<NFPoly, NFPoly> nfp_divrem(const NFPoly& a, const NFPoly& b) {
    int db = nfp_degree(b);
    if (db < 0)
        throw Error("division by zero polynomial");
    NFElem lc_inv = b[db].inverse();
    NFPoly r = nfp_trim(a);
    NFPoly q;
    int da = nfp_degree(r);
    if (da >= db)
        q.resize(da - db + 1);
    while ((da = nfp_degree(r)) >= db) {
        NFElem c = r[da] * lc_inv;
        q[da - db] = c;
        for (int i = 0; i <= db; ++i)
            r[da - db + i] = r[da - db + i] - c * b[i];
        r = nfp_trim(std::move(r));
        if (static_cast<int>(r.size()) > da) // exact cancellation guard
            r.resize(da);
    }
    return {nfp_trim(std::move(q)), nfp_trim(std::move(r))};
}

NFPoly nfp_gcd_monic(const NFPoly& a, const NFPoly& b) {
    NFPoly f = nfp_trim(a), g = nfp_trim(b);
    if (nfp_degree(f) < 0)
        return nfp_degree(g) < 0 ? g : nfp_monic(g);
    if (nfp_degree(g) < 0)
        return nfp_monic(f);
    while (true) {
        int dg = nfp_degree(g);
        if (dg < 0)
            break;
        auto [q, r] = nfp_divrem(f, g);
        f = std::move(g);
        g = std::move(r);
    }
    if (nfp_degree(f) < 0)
        return f;
    return nfp_monic(f);
}

NFPoly nfp_derivative(const NFPoly& a) {
    NFPoly r;
    for (size_t i = 1; i < a.size(); ++i)
        r.push_back(a[i] * Rational(static_cast<long>(i)));
    return nfp_trim(std::move(r));
}

NFElem nfp_eval(const NFPoly& a, const NFElem& x) {
    NFElem acc{Rational(0)};
    for (auto it = a.rbegin(); it != a.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

NFPoly nfp_from_qpoly(const QPoly& p) {
    NFPoly r;
    for (int i = 0; i <= p.degree(); ++i)
        r.emplace_back(p[i]);
    return nfp_trim(std::move(r));
}

std::vector<std::pair<NFPoly, int>> nfp_squarefree_decomposition(const NFPoly& p) {
    std::vector<std::pair<NFPoly, int>> out;
    int d = nfp_degree(p);
    if (d <= 0)
        return out;
    NFPoly a = nfp_monic(p);
    NFPoly da = nfp_derivative(a);
    NFPoly g = nfp_gcd_monic(a, da);
    if (nfp_degree(g) == 0) {
        out.emplace_back(a, 1);
        return out;
    }
    NFPoly b = nfp_divrem(a, g).first;
    NFPoly c = nfp_divrem(da, g).first;
    NFPoly z = nfp_sub(c, nfp_derivative(b));
    int k = 1;
    while (nfp_degree(b) > 0) {
        NFPoly f = nfp_gcd_monic(b, z);
        if (nfp_degree(f) > 0)
            out.emplace_back(f, k);
        b = nfp_divrem(b, f).first;
        z = nfp_sub(nfp_divrem(z, f).first, nfp_derivative(b));
        ++k;
    }
    return out;
}

// ---------------------------------------------------------------------------
// NumberField
// ---------------------------------------------------------------------------

FieldPtr NumberField::make(const QPoly& poly, const Box& designating) {
    QPoly sf = qpoly_squarefree_part(poly).monic();
    if (sf.degree() < 1)
        throw Error("field extension needs positive degree");
    auto f = FieldPtr(new NumberField());
    f->base_ = nullptr;
    f->rational_minpoly_ = sf;
    f->minpoly_ = nfp_from_qpoly(sf);
    f->gen_box_ = designating;
    f->depth_ = 1;
    return f;
}

FieldPtr NumberField::make(const FieldPtr& base, NFPoly minpoly, const Box& designating) {
    if (!base) {
        QPoly q;
        std::vector<Rational> cs;
        for (const auto& c : minpoly)
            cs.push_back(c.is_rational_form() ? c.rational_value() : throw Error("rational poly expected"));
        return make(QPoly(std::move(cs)), designating);
    }
    NFPoly m = nfp_monic(minpoly);
    NFPoly g = nfp_gcd_monic(m, nfp_derivative(m));
    if (nfp_degree(g) > 0)
        m = nfp_divrem(m, g).first; // squarefree part over the component
    auto f = FieldPtr(new NumberField());
    f->base_ = base;
    f->minpoly_ = std::move(m);
    f->gen_box_ = designating;
    f->depth_ = base->depth() + 1;
    return f;
}

NFElem NumberField::gen() {
    return NFElem(shared_from_this(), {NFElem(Rational(0)), NFElem(Rational(1))});
}

bool NumberField::shrink_to_component(const NFPoly& monic_factor) {
    NFPoly factor = nfp_trim(monic_factor);
    int df = nfp_degree(factor);
    int dm = nfp_degree(minpoly_);
    if (df <= 0 || df >= dm)
        throw Error("component factor must be proper");
    NFPoly cofactor = nfp_divrem(minpoly_, factor).first;
    // Decide which factor's root set holds the designated generator.
    Rational w = pow2_inv(16);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Box gx = gen_enclosure(w);
        Box fv = nfp_enclosure_at(factor, gx, w);
        if (!fv.contains_zero()) {
            minpoly_ = std::move(cofactor);
            sync_rational_minpoly();
            return false;
        }
        Box cv = nfp_enclosure_at(cofactor, gx, w);
        if (!cv.contains_zero()) {
            minpoly_ = std::move(factor);
            sync_rational_minpoly();
            return true;
        }
        w = w / 64;
    }
    throw Error("component selection did not converge");
}

void NumberField::sync_rational_minpoly() {
    if (depth_ != 1)
        return;
    std::vector<Rational> cs;
    for (const auto& c : minpoly_)
        cs.push_back(c.rational_value());
    rational_minpoly_ = QPoly(std::move(cs));
}

Box NumberField::gen_enclosure(const Rational& max_side) {
    if (gen_box_.max_side() <= max_side)
        return gen_box_;
    if (depth_ == 1) {
        gen_box_ = refine_root_box(rational_minpoly_, gen_box_, max_side);
        return gen_box_;
    }
    // Interval Newton with subdivision fallback against the tower polynomial.
    NFPoly dmin = nfp_derivative(minpoly_);
    Rational cw = max_side / 16;
    Box X = gen_box_;
    for (int attempt = 0; attempt < 48; ++attempt) {
        bool progressed = false;
        for (int step = 0; step < 6; ++step) {
            Box m = Box::point(X.re.mid(), X.im.mid());
            Box fm = nfp_enclosure_at(minpoly_, m, cw);
            Box fd = nfp_enclosure_at(dmin, X, cw);
            if (fd.contains_zero())
                break;
            Box candidate = m - fm * fd.inverse();
            if (!candidate.intersects(X))
                break;
            Box nx = intersect(candidate, X);
            if (nx.max_side() < X.max_side()) {
                X = nx;
                progressed = true;
            }
            if (X.max_side() <= max_side) {
                gen_box_ = X;
                return gen_box_;
            }
        }
        if (!progressed) {
            // Quarter the box and keep the quadrants that may contain the root.
            Rational fr = (attempt % 2 == 0) ? Rational(1, 2) : Rational(4, 7);
            Rational xm = X.re.lo + X.re.width() * fr;
            Rational ym = X.im.lo + X.im.width() * fr;
            std::vector<Box> quads = {
                Box(RatInterval(X.re.lo, xm), RatInterval(X.im.lo, ym)),
                Box(RatInterval(X.re.lo, xm), RatInterval(ym, X.im.hi)),
                Box(RatInterval(xm, X.re.hi), RatInterval(X.im.lo, ym)),
                Box(RatInterval(xm, X.re.hi), RatInterval(ym, X.im.hi)),
            };
            std::vector<Box> keep;
            for (const auto& q : quads)
                if (nfp_enclosure_at(minpoly_, q, cw).contains_zero())
                    keep.push_back(q);
            if (keep.size() == 1) {
                X = keep[0];
                if (X.max_side() <= max_side) {
                    gen_box_ = X;
                    return gen_box_;
                }
                continue;
            }
        }
        cw = cw / 64;
    }
    throw Error("generator refinement did not converge");
}

// ---------------------------------------------------------------------------
// Roots over a tower field
// ---------------------------------------------------------------------------

std::vector<Box> isolate_tower_poly_roots(const NFPoly& poly) {
    int d = nfp_degree(poly);
    if (d < 1)
        throw Error("tower root isolation needs positive degree");
    NFPoly p = nfp_monic(poly);
    NFPoly dp = nfp_derivative(p);
    Rational cw = pow2_inv(48);
    long prec = 192;
    for (int attempt = 0; attempt < 18; ++attempt) {
        std::vector<std::pair<Rational, Rational>> mids;
        std::vector<Box> cboxes;
        bool ok = true;
        for (int i = 0; i <= d; ++i) {
            Box b = p[i].enclosure(cw);
            cboxes.push_back(b);
            mids.emplace_back(b.re.mid(), b.im.mid());
        }
        auto approx = aberth_approximate(mids, prec);
        std::vector<Box> out;
        for (int k = 0; k < d && ok; ++k) {
            Box x0 = Box::point(approx[k].first, approx[k].second);
            Box fv = Box::point(Rational(0), Rational(0));
            for (int i = d; i >= 0; --i)
                fv = fv * x0 + cboxes[i];
            Box dv = Box::point(Rational(0), Rational(0));
            for (int i = d - 1; i >= 0; --i) {
                Box c = cboxes[i + 1] * Rational(i + 1);
                dv = dv * x0 + c;
            }
            Rational dlo = dv.abs2_lo();
            if (dlo == 0) {
                ok = false;
                break;
            }
            Rational rad = sqrt_upper_bound(Rational(d) * Rational(d) * fv.abs2_hi() / dlo);
            out.push_back(Box(RatInterval(approx[k].first - rad, approx[k].first + rad),
                              RatInterval(approx[k].second - rad, approx[k].second + rad)));
        }
        if (ok) {
            for (size_t i = 0; i < out.size() && ok; ++i)
                for (size_t j = i + 1; j < out.size(); ++j)
                    if (out[i].intersects(out[j])) {
                        ok = false;
                        break;
                    }
        }
        if (ok) {
            std::sort(out.begin(), out.end(), [](const Box& a, const Box& b) {
                if (a.re.mid() != b.re.mid())
                    return a.re.mid() < b.re.mid();
                return a.im.mid() < b.im.mid();
            });
            return out;
        }
        cw = cw / 256;
        prec *= 2;
    }
    throw Error("tower root isolation failed to certify");
}

std::vector<FieldRoot> nf_roots(const FieldPtr& fld, const NFPoly& poly) {
    std::vector<FieldRoot> out;
    NFPoly p = nfp_trim(poly);
    int d = nfp_degree(p);
    if (d < 1)
        throw Error("nf_roots needs positive degree");
    auto square_free = nfp_squarefree_decomposition(p);
    for (const auto& [factor_raw, mult] : square_free) {
        NFPoly factor = nfp_monic(factor_raw);
        int df = nfp_degree(factor);
        if (df == 1) {
            out.push_back({fld, -factor[0], mult});
            continue;
        }
        std::vector<Box> boxes = isolate_tower_poly_roots(factor);
        for (const auto& b : boxes) {
            // Exact rational roots keep the field small.
            if (b.im.contains_zero()) {
                auto cand = rational_snap(b.re.mid(), b.re.width() + b.im.width());
                if (cand && b.contains_point(*cand, Rational(0)) &&
                    nfp_eval(factor, NFElem(*cand)).is_zero()) {
                    out.push_back({fld, NFElem(*cand), mult});
                    continue;
                }
            }
            FieldPtr ext = NumberField::make(fld, factor, b);
            out.push_back({ext, ext->gen(), mult});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Export to the exchange representation
// ---------------------------------------------------------------------------

std::pair<QPoly, Box> nf_export(const NFElem& e) {
    if (e.is_rational_form()) {
        const Rational& r = e.rational_value();
        QPoly def(std::vector<Rational>{-r, Rational(1)});
        return {def.primitive(), Box::point(r, Rational(0))};
    }
    // Variables: one per tower level, then the result variable.
    std::vector<FieldPtr> chain;
    for (FieldPtr f = e.fld(); f; f = f->base())
        chain.push_back(f);
    std::reverse(chain.begin(), chain.end());
    int h = static_cast<int>(chain.size());
    std::vector<std::string> vars;
    for (int k = 1; k <= h; ++k)
        vars.push_back("@g" + std::to_string(k));
    vars.push_back("@x");

    MPoly P = MPoly::variable(vars, h) - e.to_mpoly(vars);
    for (int k = h; k >= 1; --k) {
        const NFPoly& m = chain[k - 1]->minpoly();
        MPoly mp(vars);
        MPoly g = MPoly::variable(vars, k - 1);
        for (auto it = m.rbegin(); it != m.rend(); ++it)
            mp = mp * g + it->to_mpoly(vars);
        P = resultant(mp, P, k - 1);
    }
    QPoly def = qpoly_squarefree_part(P.to_qpoly()).primitive();
    if (def.degree() < 1)
        throw Error("degenerate exported polynomial");
    Rational w = pow2_inv(16);
    for (int attempt = 0; attempt < 48; ++attempt) {
        Box enc = e.enclosure(w);
        try {
            auto inside = roots_inside(def, enc);
            if (inside.size() == 1)
                return {def, inside[0].box};
        } catch (const Error&) {
            // boundary straddle; shrink and retry
        }
        w = w / 64;
    }
    throw Error("export designation did not converge");
}

} // namespace curveasym
