#include "curveasym/roots.hpp"

#include <algorithm>
#include <map>

#include "curveasym/bigfloat.hpp"

namespace curveasym {

namespace {

BigComplex eval_poly(const std::vector<BigComplex>& coeffs, const BigComplex& x) {
    BigComplex acc(x.prec());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::vector<BigComplex> derivative(const std::vector<BigComplex>& coeffs, long prec) {
    std::vector<BigComplex> d;
    for (size_t i = 1; i < coeffs.size(); ++i)
        d.push_back(coeffs[i] * BigComplex::from(Rational(static_cast<long>(i)), Rational(0), prec));
    return d;
}

// |p(z)|^2 at an exact complex rational point.
Rational abs2_at(const QPoly& p, const Rational& re, const Rational& im) {
    auto [a, b] = p.eval_complex(re, im);
    return a * a + b * b;
}

struct CacheEntry {
    long prec = 0;
    std::vector<IsolatedRoot> roots;
};

std::map<std::string, CacheEntry>& cache() {
    static std::map<std::string, CacheEntry> c;
    return c;
}

std::optional<std::vector<IsolatedRoot>> try_isolate(const QPoly& p, long prec) {
    int d = p.degree();
    QPoly dp = p.derivative();
    std::vector<std::pair<Rational, Rational>> coeffs;
    for (int i = 0; i <= d; ++i)
        coeffs.emplace_back(p[i], Rational(0));
    auto approx = aberth_approximate(coeffs, prec);
    std::vector<IsolatedRoot> roots;
    for (int k = 0; k < d; ++k) {
        const Rational& cr = approx[k].first;
        const Rational& ci = approx[k].second;
        Rational pv2 = abs2_at(p, cr, ci);
        if (pv2 == 0) {
            roots.push_back({Box::point(cr, ci), cr, ci});
            continue;
        }
        Rational dv2 = abs2_at(dp, cr, ci);
        if (dv2 == 0)
            return std::nullopt;
        // The disk of radius d*|p(c)/p'(c)| around c contains at least one root.
        Rational rad = sqrt_upper_bound(Rational(d) * Rational(d) * pv2 / dv2);
        roots.push_back(
            {Box(RatInterval(cr - rad, cr + rad), RatInterval(ci - rad, ci + rad)), cr, ci});
    }
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j)
            if (roots[i].box.intersects(roots[j].box))
                return std::nullopt;
    std::sort(roots.begin(), roots.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) {
        if (a.approx_re != b.approx_re)
            return a.approx_re < b.approx_re;
        return a.approx_im < b.approx_im;
    });
    return roots;
}

const CacheEntry& isolation_at_least(const QPoly& p, long prec) {
    if (p.degree() < 1)
        throw Error("root isolation needs positive degree");
    std::string key = p.str();
    CacheEntry& e = cache()[key];
    if (e.prec >= prec && !e.roots.empty())
        return e;
    if (p.degree() == 1) {
        Rational root = -p[0] / p[1];
        e.prec = 1L << 40;
        e.roots = {{Box::point(root, Rational(0)), root, Rational(0)}};
        return e;
    }
    long w = std::max(prec, e.prec > 0 ? e.prec * 2 : 128L);
    for (int attempt = 0; attempt < 14; ++attempt) {
        auto r = try_isolate(p, w);
        if (r) {
            e.prec = w;
            e.roots = std::move(*r);
            return e;
        }
        w *= 2;
    }
    throw Error("root isolation failed to certify: " + p.str());
}

} // namespace

Rational sqrt_upper_bound(const Rational& q) {
    if (q < 0)
        throw Error("sqrt of negative rational");
    if (q == 0)
        return Rational(0);
    mpfr_t v;
    mpfr_init2(v, 96);
    mpfr_set_q(v, q.get_mpq_t(), MPFR_RNDU);
    mpfr_sqrt(v, v, MPFR_RNDU);
    Rational r;
    mpfr_get_q(r.get_mpq_t(), v);
    mpfr_clear(v);
    return r;
}

std::vector<std::pair<Rational, Rational>> aberth_approximate(
    const std::vector<std::pair<Rational, Rational>>& cs, long prec) {
    if (cs.size() < 2)
        throw Error("aberth needs positive degree");
    int d = static_cast<int>(cs.size()) - 1;
    std::vector<BigComplex> coeffs;
    coeffs.reserve(cs.size());
    for (const auto& [re, im] : cs)
        coeffs.push_back(BigComplex::from(re, im, prec));
    std::vector<BigComplex> dcoeffs = derivative(coeffs, prec);

    // Cauchy-style bound for the initial circle.
    BigFloat lead2 = coeffs[d].abs2();
    if (lead2.is_zero())
        throw Error("aberth: zero leading coefficient");
    BigFloat bound2 = BigFloat::from(Rational(1), prec);
    for (int i = 0; i < d; ++i) {
        BigFloat m = coeffs[i].abs2() / lead2;
        if (m > bound2)
            bound2 = m;
    }
    BigFloat bound = bound2.sqrt() + BigFloat::from(Rational(1), prec);

    BigFloat pi = BigFloat::pi(prec);
    std::vector<BigComplex> x;
    for (int k = 0; k < d; ++k) {
        BigFloat theta =
            pi * BigFloat::from(Rational(2 * k + 1, d) + Rational(1, 4 * d + 3), prec);
        BigFloat radius = bound * BigFloat::from(Rational(2 * k + d + 1, 2 * d), prec);
        x.push_back(BigComplex::polar(radius, theta));
    }

    BigFloat tol = BigFloat::from(Rational(1), prec);
    for (long i = 0; i < prec * 3 / 4; ++i)
        tol = tol * BigFloat::from(Rational(1, 2), prec);
    BigFloat tol2 = tol * tol;

    int iters = 64 + 16 * d;
    for (int it = 0; it < iters; ++it) {
        BigFloat worst = BigFloat::from(Rational(0), prec);
        for (int k = 0; k < d; ++k) {
            BigComplex pv = eval_poly(coeffs, x[k]);
            BigComplex dv = eval_poly(dcoeffs, x[k]);
            if (dv.abs2().is_zero())
                continue;
            BigComplex w = pv / dv;
            BigComplex s(prec);
            bool degenerate = false;
            for (int j = 0; j < d; ++j) {
                if (j == k)
                    continue;
                BigComplex diff = x[k] - x[j];
                if (diff.abs2().is_zero()) {
                    degenerate = true;
                    break;
                }
                s = s + BigComplex::from(Rational(1), Rational(0), prec) / diff;
            }
            if (degenerate) {
                // Nudge coincident iterates apart.
                x[k] = x[k] + BigComplex::from(Rational(1, 1000 + k), Rational(1, 997 + k), prec);
                continue;
            }
            BigComplex denom = BigComplex::from(Rational(1), Rational(0), prec) - w * s;
            if (denom.abs2().is_zero())
                continue;
            BigComplex corr = w / denom;
            x[k] = x[k] - corr;
            BigFloat c = corr.abs2();
            if (c > worst)
                worst = c;
        }
        if (worst < tol2)
            break;
    }

    std::vector<std::pair<Rational, Rational>> out;
    out.reserve(d);
    for (int k = 0; k < d; ++k)
        out.emplace_back(x[k].re.to_rational(), x[k].im.to_rational());
    return out;
}

std::vector<IsolatedRoot> isolate_roots(const QPoly& squarefree, long prec) {
    return isolation_at_least(squarefree, prec).roots;
}

Box refine_root_box(const QPoly& p, const Box& designating, const Rational& target_width) {
    long prec = 128;
    for (int attempt = 0; attempt < 24; ++attempt) {
        const CacheEntry& e = isolation_at_least(p, prec);
        std::vector<const IsolatedRoot*> hits;
        for (const auto& r : e.roots)
            if (r.box.intersects(designating))
                hits.push_back(&r);
        if (hits.size() == 1) {
            Box out = intersect(hits[0]->box, designating);
            if (out.max_side() <= target_width)
                return out;
        }
        prec = e.prec * 2;
    }
    throw Error("root box refinement did not converge");
}

std::vector<IsolatedRoot> roots_inside(const QPoly& p, const Box& target) {
    long prec = 128;
    for (int attempt = 0; attempt < 24; ++attempt) {
        const CacheEntry& e = isolation_at_least(p, prec);
        bool straddle = false;
        std::vector<IsolatedRoot> inside;
        for (const auto& r : e.roots) {
            if (!r.box.intersects(target))
                continue;
            if (target.contains_box(r.box))
                inside.push_back(r);
            else
                straddle = true;
        }
        if (!straddle)
            return inside;
        prec = e.prec * 2;
    }
    throw Error("root containment query did not converge");
}

std::pair<Rational, Rational> root_approx(const QPoly& p, const Box& box,
                                          const Rational& target_width) {
    Box b = refine_root_box(p, box, target_width);
    return {b.re.mid(), b.im.mid()};
}

} // namespace curveasym
