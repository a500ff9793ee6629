#include "curveasym/puiseux.hpp"

#include <algorithm>
#include <sstream>

namespace curveasym {

namespace {

std::optional<Rational> min_trunc(const std::optional<Rational>& a,
                                  const std::optional<Rational>& b) {
    if (!a)
        return b;
    if (!b)
        return a;
    return std::min(*a, *b);
}

} // namespace

PuiseuxSeries PuiseuxSeries::zero_truncated(const Rational& trunc) {
    PuiseuxSeries s;
    s.trunc_ = trunc;
    return s;
}

PuiseuxSeries PuiseuxSeries::constant(AlgNum c) {
    PuiseuxSeries s;
    if (!c.is_zero())
        s.terms_[0] = std::move(c);
    return s;
}

PuiseuxSeries PuiseuxSeries::monomial(AlgNum c, const Rational& exponent) {
    PuiseuxSeries s;
    s.insert_term(exponent, std::move(c));
    return s;
}

void PuiseuxSeries::insert_term(const Rational& exponent, AlgNum c) {
    if (trunc_ && exponent >= *trunc_)
        return;
    if (c.is_zero())
        return;
    long den = exponent.get_den().get_si();
    long num = exponent.get_num().get_si();
    if (Rational(num, den) != exponent)
        throw Error("exponent overflow");
    long nram = long_lcm(ram_, den);
    if (nram != ram_) {
        long f = nram / ram_;
        std::map<long, AlgNum> nt;
        for (auto& [k, v] : terms_)
            nt.emplace(k * f, std::move(v));
        terms_ = std::move(nt);
        ram_ = nram;
    }
    long key = num * (ram_ / den);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, std::move(c));
    } else {
        AlgNum sum = it->second + c;
        if (sum.is_zero())
            terms_.erase(it);
        else
            it->second = std::move(sum);
    }
    reduce_ram();
}

void PuiseuxSeries::set_trunc(std::optional<Rational> t) {
    trunc_ = std::move(t);
    if (!trunc_)
        return;
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (exponent_of(it->first) >= *trunc_)
            it = terms_.erase(it);
        else
            ++it;
    }
    reduce_ram();
}

void PuiseuxSeries::reduce_ram() {
    if (terms_.empty()) {
        ram_ = 1;
        return;
    }
    long g = ram_;
    for (const auto& [k, v] : terms_)
        g = long_gcd(g, k);
    if (g <= 1)
        return;
    std::map<long, AlgNum> nt;
    for (auto& [k, v] : terms_)
        nt.emplace(k / g, std::move(v));
    terms_ = std::move(nt);
    ram_ /= g;
}

std::optional<Rational> PuiseuxSeries::ord() const {
    if (terms_.empty())
        return std::nullopt;
    return exponent_of(terms_.begin()->first);
}

Rational PuiseuxSeries::ord_low() const {
    if (!terms_.empty())
        return exponent_of(terms_.begin()->first);
    if (trunc_)
        return *trunc_;
    // exact zero: effectively +infinity; callers special-case known_zero()
    throw Error("order of the exact zero series");
}

AlgNum PuiseuxSeries::coeff_at(const Rational& exponent) const {
    for (const auto& [k, v] : terms_)
        if (exponent_of(k) == exponent)
            return v;
    return AlgNum(Rational(0));
}

AlgNum PuiseuxSeries::leading_coeff() const {
    if (terms_.empty())
        throw Error("leading coefficient of a series with no known terms");
    return terms_.begin()->second;
}

PuiseuxSeries PuiseuxSeries::operator-() const {
    PuiseuxSeries r = *this;
    for (auto& [k, v] : r.terms_)
        v = -v;
    return r;
}

PuiseuxSeries PuiseuxSeries::operator+(const PuiseuxSeries& o) const {
    PuiseuxSeries r;
    r.trunc_ = min_trunc(trunc_, o.trunc_);
    for (const auto& [k, v] : terms_)
        r.insert_term(exponent_of(k), v);
    for (const auto& [k, v] : o.terms_)
        r.insert_term(o.exponent_of(k), v);
    return r;
}

PuiseuxSeries PuiseuxSeries::operator-(const PuiseuxSeries& o) const { return *this + (-o); }

PuiseuxSeries PuiseuxSeries::operator*(const PuiseuxSeries& o) const {
    if (known_zero() || o.known_zero())
        return PuiseuxSeries();
    std::optional<Rational> bound;
    if (trunc_)
        bound = min_trunc(bound, Rational(o.ord_low() + *trunc_));
    if (o.trunc_)
        bound = min_trunc(bound, Rational(ord_low() + *o.trunc_));
    PuiseuxSeries r;
    r.trunc_ = bound;
    for (const auto& [ka, va] : terms_) {
        for (const auto& [kb, vb] : o.terms_) {
            Rational e = exponent_of(ka) + o.exponent_of(kb);
            if (bound && e >= *bound)
                continue;
            r.insert_term(e, va * vb);
        }
    }
    return r;
}

PuiseuxSeries PuiseuxSeries::scale(const AlgNum& c) const {
    if (c.is_zero()) {
        PuiseuxSeries r;
        r.trunc_ = trunc_;
        return r;
    }
    PuiseuxSeries r;
    r.trunc_ = trunc_;
    for (const auto& [k, v] : terms_)
        r.insert_term(exponent_of(k), v * c);
    return r;
}

PuiseuxSeries PuiseuxSeries::shift(const Rational& dexp) const {
    PuiseuxSeries r;
    if (trunc_)
        r.trunc_ = *trunc_ + dexp;
    for (const auto& [k, v] : terms_)
        r.insert_term(exponent_of(k) + dexp, v);
    return r;
}

PuiseuxSeries PuiseuxSeries::pow(int e) const {
    if (e < 0)
        throw Error("negative series power");
    PuiseuxSeries acc = PuiseuxSeries::constant(AlgNum(Rational(1)));
    PuiseuxSeries base = *this;
    while (e > 0) {
        if (e & 1)
            acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

PuiseuxSeries PuiseuxSeries::invert(const Rational& budget) const {
    if (terms_.empty())
        throw Error("cannot invert a series with no known terms");
    Rational o = *ord();
    AlgNum c = leading_coeff();
    // s = c t^o (1 + u); 1/s = c^-1 t^-o sum (-u)^j
    PuiseuxSeries u = shift(-o).scale(c.inverse());
    u.insert_term(Rational(0), AlgNum(Rational(-1)));
    Rational ubound = trunc_ ? Rational(*trunc_ - o) : budget;
    std::optional<Rational> utrunc = std::min(ubound, budget);
    u.set_trunc(utrunc);
    PuiseuxSeries geom = PuiseuxSeries::constant(AlgNum(Rational(1)));
    geom.set_trunc(utrunc);
    if (!u.terms().empty()) {
        Rational uord = *u.ord();
        if (uord <= 0)
            throw Error("series inversion: unit part has nonpositive order");
        PuiseuxSeries term = PuiseuxSeries::constant(AlgNum(Rational(1)));
        term.set_trunc(utrunc);
        Rational e(0);
        while (e < *utrunc) {
            term = (-u) * term;
            term.set_trunc(utrunc);
            if (term.terms().empty())
                break;
            geom = geom + term;
            e = *term.ord();
        }
    }
    return geom.scale(c.inverse()).shift(-o);
}

PuiseuxSeries PuiseuxSeries::divide(const PuiseuxSeries& o, const Rational& budget) const {
    return *this * o.invert(budget);
}

PuiseuxSeries PuiseuxSeries::truncate_at(const Rational& bound) const {
    PuiseuxSeries r = *this;
    r.set_trunc(min_trunc(r.trunc_, bound));
    return r;
}

PuiseuxSeries PuiseuxSeries::conjugate(long N, long alpha) const {
    if (N % ram_ != 0)
        throw Error("conjugation order incompatible with ramification");
    PuiseuxSeries r;
    r.trunc_ = trunc_;
    long f = N / ram_;
    for (const auto& [k, v] : terms_) {
        long lambda = ((k * f) % N + N) % N;
        AlgNum eps = AlgNum::root_of_unity(N, (alpha * lambda) % N);
        r.insert_term(exponent_of(k), v * eps);
    }
    return r;
}

BigComplex PuiseuxSeries::eval(const BigComplex& t, long prec, long N, long alpha) const {
    if (N % ram_ != 0)
        throw Error("conjugation order incompatible with ramification");
    BigComplex acc(prec);
    BigComplex root = t.pow_frac(1, ram_);
    long f = N / ram_;
    BigFloat two_pi = BigFloat::pi(prec) * BigFloat::from_long(2, prec);
    for (const auto& [k, v] : terms_) {
        BigComplex term = v.approx(prec) * root.pow_int(k);
        if (alpha != 0) {
            long lambda = ((k * f) % N + N) % N;
            BigFloat theta = two_pi * BigFloat::from(Rational(alpha * lambda, N), prec);
            term = term * BigComplex::polar(BigFloat::from_long(1, prec), theta);
        }
        acc = acc + term;
    }
    return acc;
}

namespace {

std::string render_terms(const PuiseuxSeries& s, const std::string& var, bool negate) {
    std::ostringstream os;
    bool first = true;
    std::vector<std::pair<Rational, AlgNum>> items;
    for (const auto& [k, v] : s.terms())
        items.emplace_back(negate ? Rational(-s.exponent_of(k)) : s.exponent_of(k), v);
    if (negate)
        std::sort(items.begin(), items.end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [e, c] : items) {
        std::string cs;
        bool neg = false;
        if (c.is_rational()) {
            Rational q = c.rational_value();
            neg = q < 0;
            Rational a = neg ? Rational(-q) : q;
            cs = a.get_str();
        } else {
            cs = "(" + c.approx(64).str(6) + ")";
        }
        if (first) {
            if (neg)
                os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (e == 0) {
            os << cs;
            continue;
        }
        if (cs != "1")
            os << cs << "*";
        os << var;
        if (e != 1)
            os << "^(" << e.get_str() << ")";
    }
    if (first)
        os << "0";
    if (s.trunc()) {
        Rational b = negate ? Rational(-*s.trunc()) : *s.trunc();
        os << " + O(" << var << "^(" << b.get_str() << "))";
    }
    return os.str();
}

} // namespace

std::string PuiseuxSeries::str(const std::string& var) const { return render_terms(*this, var, false); }

std::string PuiseuxSeries::str_zview(const std::string& var) const {
    return render_terms(*this, var, true);
}

PuiseuxSeries qpoly_eval_series(const QPoly& p, const PuiseuxSeries& s, const Rational& budget) {
    (void)budget; // polynomial composition of finite data stays finite
    PuiseuxSeries acc;
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * s;
        if (p[i] != 0)
            acc = acc + PuiseuxSeries::constant(AlgNum(p[i]));
    }
    return acc;
}

PuiseuxSeries rational_eval_series(const QPoly& num, const QPoly& den, const PuiseuxSeries& s,
                                   const Rational& budget) {
    PuiseuxSeries n = qpoly_eval_series(num, s, budget);
    PuiseuxSeries d = qpoly_eval_series(den, s, budget);
    if (d.no_known_terms()) {
        if (d.is_exact())
            throw Error("pole along branch");
        throw Error("insufficient truncation");
    }
    return n.divide(d, budget);
}

std::vector<PuiseuxSeries> substitute_z_inverse(const std::vector<PuiseuxSeries>& phi) {
    std::vector<PuiseuxSeries> out;
    out.reserve(phi.size());
    for (const auto& p : phi) {
        if (!p.terms().empty() && *p.ord() < 0)
            throw Error("negative exponents present");
        out.push_back(p.shift(Rational(-1)));
    }
    return out;
}

std::vector<ZTerm> z_terms(const PuiseuxSeries& r) {
    std::vector<ZTerm> out;
    for (const auto& [k, v] : r.terms())
        out.push_back({-r.exponent_of(k), v});
    std::sort(out.begin(), out.end(),
              [](const ZTerm& a, const ZTerm& b) { return a.z_exp > b.z_exp; });
    return out;
}

} // namespace curveasym
