#include "curveasym/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace curveasym {

MPoly MPoly::constant(std::vector<std::string> vars, const Rational& c) {
    MPoly p(std::move(vars));
    if (c != 0)
        p.terms_[Exponents(p.vars_.size(), 0)] = c;
    return p;
}

MPoly MPoly::variable(std::vector<std::string> vars, int index) {
    MPoly p(std::move(vars));
    Exponents e(p.vars_.size(), 0);
    e.at(index) = 1;
    p.terms_[e] = Rational(1);
    return p;
}

MPoly MPoly::from_qpoly(const QPoly& q, std::vector<std::string> vars, int index) {
    MPoly p(std::move(vars));
    for (int i = 0; i <= q.degree(); ++i) {
        if (q[i] == 0)
            continue;
        Exponents e(p.vars_.size(), 0);
        e.at(index) = i;
        p.terms_[e] = q[i];
    }
    return p;
}

int MPoly::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name)
            return static_cast<int>(i);
    throw Error("variable not present: " + name);
}

bool MPoly::is_constant() const {
    if (terms_.empty())
        return true;
    return terms_.size() == 1 &&
           std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                       [](int e) { return e == 0; });
}

Rational MPoly::constant_value() const {
    if (terms_.empty())
        return Rational(0);
    if (!is_constant())
        throw Error("not a constant polynomial");
    return terms_.begin()->second;
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

int MPoly::degree_in(int var) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, e.at(var));
    return d;
}

void MPoly::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != vars_.size())
        throw Error("exponent vector size mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0)
            terms_[e] = c;
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

MPoly MPoly::operator-() const {
    MPoly r(*this);
    for (auto& [e, c] : r.terms_)
        c = -c;
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    if (vars_ != o.vars_)
        throw Error("variable list mismatch");
    MPoly r(*this);
    for (const auto& [e, c] : o.terms_)
        r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
    if (vars_ != o.vars_)
        throw Error("variable list mismatch");
    MPoly r(vars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(ea.size());
            for (size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MPoly MPoly::operator*(const Rational& c) const {
    MPoly r(vars_);
    if (c == 0)
        return r;
    r.terms_ = terms_;
    for (auto& [e, a] : r.terms_)
        a *= c;
    return r;
}

MPoly MPoly::pow(int e) const {
    if (e < 0)
        throw Error("negative power");
    MPoly acc = MPoly::constant(vars_, Rational(1));
    MPoly base(*this);
    while (e > 0) {
        if (e & 1)
            acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

MPoly MPoly::derivative(int var) const {
    MPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e.at(var) == 0)
            continue;
        Exponents d(e);
        d[var] -= 1;
        r.add_term(d, c * Rational(e[var]));
    }
    return r;
}

MPoly MPoly::substitute(int var, const MPoly& value) const {
    if (value.vars_ != vars_)
        throw Error("variable list mismatch");
    // Horner in the substituted variable.
    std::vector<MPoly> cs = coeffs_in(var);
    MPoly acc(vars_);
    for (auto it = cs.rbegin(); it != cs.rend(); ++it)
        acc = acc * value + *it;
    return acc;
}

MPoly MPoly::eval_var(int var, const Rational& value) const {
    MPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents d(e);
        int k = d[var];
        d[var] = 0;
        r.add_term(d, c * rat_pow(value, k));
    }
    return r;
}

Rational MPoly::eval(const std::vector<Rational>& point) const {
    if (point.size() != vars_.size())
        throw Error("evaluation point size mismatch");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < e.size(); ++i)
            t *= rat_pow(point[i], e[i]);
        acc += t;
    }
    return acc;
}

std::vector<MPoly> MPoly::coeffs_in(int var) const {
    int d = degree_in(var);
    std::vector<MPoly> cs(static_cast<size_t>(std::max(d, 0)) + 1, MPoly(vars_));
    for (const auto& [e, c] : terms_) {
        Exponents r(e);
        int k = r[var];
        r[var] = 0;
        cs[k].add_term(r, c);
    }
    return cs;
}

MPoly MPoly::from_coeffs_in(int var, const std::vector<MPoly>& coeffs,
                            const std::vector<std::string>& vars) {
    MPoly r(vars);
    for (size_t k = 0; k < coeffs.size(); ++k) {
        for (const auto& [e, c] : coeffs[k].terms()) {
            Exponents d(e);
            d[var] += static_cast<int>(k);
            r.add_term(d, c);
        }
    }
    return r;
}

MPoly MPoly::leading_coeff_in(int var) const {
    int d = degree_in(var);
    MPoly r(vars_);
    if (d < 0)
        return r;
    for (const auto& [e, c] : terms_) {
        if (e.at(var) != d)
            continue;
        Exponents x(e);
        x[var] = 0;
        r.add_term(x, c);
    }
    return r;
}

MPoly MPoly::homogenize(const std::string& fresh_name) const {
    if (is_zero())
        throw Error("zero input");
    std::vector<std::string> nv(vars_);
    nv.push_back(fresh_name);
    MPoly r(nv);
    int d = total_degree();
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        Exponents ne(e);
        ne.push_back(d - s);
        r.add_term(ne, c);
    }
    return r;
}

MPoly MPoly::leading_form() const {
    if (is_zero())
        throw Error("zero input");
    int d = total_degree();
    MPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        if (s == d)
            r.add_term(e, c);
    }
    return r;
}

MPoly MPoly::with_vars(const std::vector<std::string>& newvars) const {
    std::vector<int> where(vars_.size(), -1);
    for (size_t i = 0; i < vars_.size(); ++i) {
        for (size_t j = 0; j < newvars.size(); ++j)
            if (newvars[j] == vars_[i])
                where[i] = static_cast<int>(j);
        if (where[i] < 0 && degree_in(static_cast<int>(i)) > 0)
            throw Error("with_vars: variable " + vars_[i] + " missing from target list");
    }
    MPoly r(newvars);
    for (const auto& [e, c] : terms_) {
        Exponents ne(newvars.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            ne[where[i]] = e[i];
        }
        r.add_term(ne, c);
    }
    return r;
}

MPoly MPoly::drop_var(int var) const {
    if (degree_in(var) > 0)
        throw Error("drop_var: variable in use");
    std::vector<std::string> nv;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (static_cast<int>(i) != var)
            nv.push_back(vars_[i]);
    MPoly r(nv);
    for (const auto& [e, c] : terms_) {
        Exponents ne;
        for (size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) != var)
                ne.push_back(e[i]);
        r.add_term(ne, c);
    }
    return r;
}

QPoly MPoly::to_qpoly() const {
    int used = -1;
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (degree_in(static_cast<int>(i)) > 0) {
            if (used >= 0)
                throw Error("not univariate");
            used = static_cast<int>(i);
        }
    }
    if (used < 0)
        used = 0;
    std::vector<Rational> cs(static_cast<size_t>(std::max(degree_in(used), 0)) + 1, Rational(0));
    for (const auto& [e, c] : terms_)
        cs[e.empty() ? 0 : e[used]] += c;
    return QPoly(std::move(cs));
}

std::string MPoly::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rational& c = it->second;
        Rational a = c > 0 ? c : Rational(-c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        bool any = false;
        std::ostringstream mono;
        for (size_t i = 0; i < it->first.size(); ++i) {
            int e = it->first[i];
            if (e == 0)
                continue;
            if (any) mono << "*";
            mono << vars_[i];
            if (e > 1) mono << "^" << e;
            any = true;
        }
        if (!any || a != 1) {
            os << a.get_str();
            if (any) os << "*";
        }
        os << mono.str();
    }
    return os.str();
}

MPoly mpoly_exact_div(const MPoly& a, const MPoly& b) {
    if (b.is_zero())
        throw Error("division by zero polynomial");
    MPoly r = a;
    MPoly q(a.vars());
    const auto& bt = b.terms();
    auto blead = bt.rbegin(); // lex-largest term of b
    while (!r.is_zero()) {
        auto rlead = r.terms().rbegin();
        MPoly::Exponents e(rlead->first.size());
        bool ok = true;
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] = rlead->first[i] - blead->first[i];
            if (e[i] < 0)
                ok = false;
        }
        if (!ok)
            throw Error("inexact polynomial division");
        Rational c = rlead->second / blead->second;
        MPoly t(a.vars());
        t.add_term(e, c);
        q = q + t;
        r = r - t * b;
    }
    return q;
}

MPoly mpoly_prem(const MPoly& a, const MPoly& b, int var) {
    int m = a.degree_in(var), n = b.degree_in(var);
    if (n < 0)
        throw Error("pseudo-division by zero polynomial");
    if (m < n)
        return a;
    MPoly lc = b.leading_coeff_in(var);
    MPoly r = a;
    int k = m - n + 1;
    while (!r.is_zero() && r.degree_in(var) >= n) {
        int d = r.degree_in(var);
        MPoly rl = r.leading_coeff_in(var);
        // r <- lc*r - rl*x^(d-n)*b
        MPoly shift = MPoly::variable(a.vars(), var).pow(d - n);
        r = r * lc - shift * rl * b;
        --k;
    }
    // Normalize so exactly lc^(m-n+1) * a was reduced.
    for (int i = 0; i < k; ++i)
        r = r * lc;
    return r;
}

MPoly mpoly_content_in(const MPoly& a, int var) {
    std::vector<MPoly> cs = a.coeffs_in(var);
    MPoly g(a.vars());
    for (const auto& c : cs) {
        if (c.is_zero())
            continue;
        g = g.is_zero() ? c : mpoly_gcd(g, c);
        if (g.is_constant())
            break;
    }
    return g;
}

MPoly mpoly_primitive_in(const MPoly& a, int var) {
    if (a.is_zero())
        return a;
    return mpoly_exact_div(a, mpoly_content_in(a, var));
}

namespace {

// Highest-index variable actually used by either polynomial, or -1.
int main_var(const MPoly& a, const MPoly& b) {
    for (int v = static_cast<int>(a.vars().size()) - 1; v >= 0; --v)
        if (a.degree_in(v) > 0 || b.degree_in(v) > 0)
            return v;
    return -1;
}

MPoly normalized_gcd_result(MPoly g) {
    if (g.is_zero())
        return g;
    // Scale so the lex-leading coefficient is 1 over Q where possible: divide
    // by the rational content only (keep polynomial structure).
    Rational lead = g.terms().rbegin()->second;
    return g * (Rational(1) / lead);
}

} // namespace

MPoly mpoly_gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero())
        return normalized_gcd_result(b);
    if (b.is_zero())
        return normalized_gcd_result(a);
    int v = main_var(a, b);
    if (v < 0)
        return MPoly::constant(a.vars(), Rational(1));
    bool av = a.degree_in(v) > 0, bv = b.degree_in(v) > 0;
    if (av != bv) {
        // One side free of v: gcd divides the content of the other.
        const MPoly& free = av ? b : a;
        const MPoly& full = av ? a : b;
        return mpoly_gcd(free, mpoly_content_in(full, v));
    }
    MPoly ca = mpoly_content_in(a, v);
    MPoly cb = mpoly_content_in(b, v);
    MPoly f = mpoly_exact_div(a, ca);
    MPoly g = mpoly_exact_div(b, cb);
    if (f.degree_in(v) < g.degree_in(v))
        std::swap(f, g);
    while (!g.is_zero()) {
        MPoly r = mpoly_prem(f, g, v);
        f = std::move(g);
        if (r.is_zero()) {
            g = r;
        } else {
            g = mpoly_primitive_in(r, v);
        }
    }
    MPoly cont = mpoly_gcd(ca, cb);
    return normalized_gcd_result(cont * mpoly_primitive_in(f, v));
}

std::vector<std::pair<MPoly, int>> mpoly_squarefree_decomposition(const MPoly& a, int var) {
    std::vector<std::pair<MPoly, int>> out;
    if (a.is_zero() || a.degree_in(var) <= 0)
        return out;
    MPoly d = a.derivative(var);
    MPoly g = mpoly_gcd(a, d);
    MPoly b = mpoly_exact_div(a, g.is_constant() ? MPoly::constant(a.vars(), g.constant_value()) : g);
    MPoly c = mpoly_exact_div(d, g.is_constant() ? MPoly::constant(a.vars(), g.constant_value()) : g);
    MPoly z = c - b.derivative(var);
    int k = 1;
    while (b.degree_in(var) > 0 || !b.is_constant()) {
        if (b.is_constant())
            break;
        MPoly f = mpoly_gcd(b, z);
        if (!f.is_constant() || f.constant_value() != 1) {
            if (!f.is_constant())
                out.emplace_back(f, k);
        }
        MPoly fd = f.is_constant() ? MPoly::constant(a.vars(), f.constant_value()) : f;
        b = mpoly_exact_div(b, fd);
        z = mpoly_exact_div(z, fd) - b.derivative(var);
        ++k;
    }
    return out;
}

MPoly mpoly_squarefree_part(const MPoly& a, int var) {
    auto dec = mpoly_squarefree_decomposition(a, var);
    MPoly r = MPoly::constant(a.vars(), Rational(1));
    for (const auto& [f, m] : dec)
        r = r * f;
    return r;
}

MPoly resultant(const MPoly& f, const MPoly& g, int var) {
    int m = f.degree_in(var), n = g.degree_in(var);
    if (m < 0 || n < 0)
        throw Error("resultant of zero polynomial");
    if (m < n) {
        MPoly r = resultant(g, f, var);
        if ((m & 1) && (n & 1))
            return -r;
        return r;
    }
    if (n == 0)
        return g.pow(m); // g free of var
    int s = 1;
    MPoly A = f, B = g;
    MPoly gcoef = MPoly::constant(f.vars(), Rational(1));
    MPoly h = MPoly::constant(f.vars(), Rational(1));
    while (true) {
        int dA = A.degree_in(var), dB = B.degree_in(var);
        int delta = dA - dB;
        if ((dA & 1) && (dB & 1))
            s = -s;
        MPoly R = mpoly_prem(A, B, var);
        A = B;
        MPoly denom = gcoef * h.pow(delta);
        B = R.is_zero() ? R : mpoly_exact_div(R, denom);
        gcoef = A.leading_coeff_in(var);
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = gcoef;
        } else {
            h = mpoly_exact_div(gcoef.pow(delta), h.pow(delta - 1));
        }
        if (B.is_zero())
            return MPoly(f.vars()); // positive-degree common factor
        if (B.degree_in(var) == 0)
            break;
    }
    int p = A.degree_in(var);
    MPoly Bc = B.leading_coeff_in(var); // B itself, viewed as coefficient
    MPoly res = p == 1 ? Bc : mpoly_exact_div(Bc.pow(p), h.pow(p - 1));
    return s < 0 ? -res : res;
}

MPoly resultant_sylvester(const MPoly& f, const MPoly& g, int var) {
    int m = f.degree_in(var), n = g.degree_in(var);
    if (m < 0 || n < 0)
        throw Error("resultant of zero polynomial");
    if (m == 0 && n == 0)
        return MPoly::constant(f.vars(), Rational(1));
    if (m == 0)
        return f.pow(n);
    if (n == 0)
        return g.pow(m);
    std::vector<MPoly> fc = f.coeffs_in(var);
    std::vector<MPoly> gc = g.coeffs_in(var);
    int size = m + n;
    std::vector<std::vector<MPoly>> M(size, std::vector<MPoly>(size, MPoly(f.vars())));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j)
            M[i][i + j] = fc[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j)
            M[n + i][i + j] = gc[n - j];
    // Bareiss fraction-free elimination.
    int sign = 1;
    MPoly prev = MPoly::constant(f.vars(), Rational(1));
    for (int k = 0; k < size - 1; ++k) {
        if (M[k][k].is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < size; ++i)
                if (!M[i][k].is_zero()) { piv = i; break; }
            if (piv < 0)
                return MPoly(f.vars());
            std::swap(M[k], M[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j) {
                MPoly num = M[k][k] * M[i][j] - M[i][k] * M[k][j];
                M[i][j] = num.is_zero() ? num : mpoly_exact_div(num, prev);
            }
            M[i][k] = MPoly(f.vars());
        }
        prev = M[k][k];
    }
    MPoly det = M[size - 1][size - 1];
    return sign < 0 ? -det : det;
}

} // namespace curveasym
