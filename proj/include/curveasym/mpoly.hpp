#ifndef CURVEASYM_MPOLY_HPP
#define CURVEASYM_MPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "curveasym/qpoly.hpp"
#include "curveasym/rational.hpp"

namespace curveasym {

/// Sparse multivariate polynomial over the rationals. Terms map exponent
/// vectors (one slot per variable) to nonzero coefficients.
class MPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational>;

    MPoly() = default;
    explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MPoly constant(std::vector<std::string> vars, const Rational& c);
    static MPoly variable(std::vector<std::string> vars, int index);
    static MPoly from_qpoly(const QPoly& p, std::vector<std::string> vars, int index);

    const std::vector<std::string>& vars() const { return vars_; }
    int var_index(const std::string& name) const;
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;

    int total_degree() const;
    int degree_in(int var) const;
    bool involves(int var) const { return degree_in(var) > 0; }

    void add_term(const Exponents& e, const Rational& c);

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const Rational& c) const;
    MPoly pow(int e) const;
    bool operator==(const MPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

    MPoly derivative(int var) const;
    /// Substitute a polynomial (over the same variable list) for one variable.
    MPoly substitute(int var, const MPoly& value) const;
    MPoly eval_var(int var, const Rational& value) const;
    Rational eval(const std::vector<Rational>& point) const;

    /// Coefficients of this viewed as a univariate polynomial in `var`.
    std::vector<MPoly> coeffs_in(int var) const;
    static MPoly from_coeffs_in(int var, const std::vector<MPoly>& coeffs,
                                const std::vector<std::string>& vars);
    MPoly leading_coeff_in(int var) const;

    /// Homogenization with one fresh variable appended.
    MPoly homogenize(const std::string& fresh_name) const;
    MPoly leading_form() const;

    /// Remap onto a variable list that contains all variables of this poly.
    MPoly with_vars(const std::vector<std::string>& newvars) const;
    /// Drop a variable that no term uses.
    MPoly drop_var(int var) const;

    QPoly to_qpoly() const; // requires at most one variable in use
    std::string str() const;

private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

MPoly mpoly_exact_div(const MPoly& a, const MPoly& b);
/// Pseudo-remainder of a by b w.r.t. var: lc(b)^(deg a - deg b + 1) * a mod b.
MPoly mpoly_prem(const MPoly& a, const MPoly& b, int var);
MPoly mpoly_gcd(const MPoly& a, const MPoly& b);
MPoly mpoly_content_in(const MPoly& a, int var);
MPoly mpoly_primitive_in(const MPoly& a, int var);
std::vector<std::pair<MPoly, int>> mpoly_squarefree_decomposition(const MPoly& a, int var);
MPoly mpoly_squarefree_part(const MPoly& a, int var);

/// Sylvester-convention resultant (rows of f first) via subresultants.
MPoly resultant(const MPoly& f, const MPoly& g, int var);
/// Same determinant computed by fraction-free elimination of the Sylvester matrix.
MPoly resultant_sylvester(const MPoly& f, const MPoly& g, int var);

} // namespace curveasym

#endif
