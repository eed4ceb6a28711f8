#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "eigenseq/rational.hpp"
#include "eigenseq/series.hpp"

namespace eigenseq {

// Finite sum of generalized monomials coeff * x_0^{e_0} ... x_{k-1}^{e_{k-1}} with rational
// exponents, viewed as functions on the positive orthant. Distinct exponent vectors give
// linearly independent functions there, so equality of canonical forms is equality of functions.
class PowerSum {
public:
    using Exponents = std::vector<Rational>;

    explicit PowerSum(std::size_t vars) : vars_(vars) {}

    static PowerSum constant(std::size_t vars, const Rational &c);
    static PowerSum monomial(const Exponents &e, const Rational &c = Rational(1));

    std::size_t vars() const { return vars_; }
    const std::map<Exponents, Rational> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    PowerSum &add_term(const Exponents &e, const Rational &c);

    friend PowerSum operator+(const PowerSum &a, const PowerSum &b);
    friend PowerSum operator-(const PowerSum &a, const PowerSum &b);
    friend PowerSum operator*(const PowerSum &a, const PowerSum &b);
    friend bool operator==(const PowerSum &a, const PowerSum &b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }

    // Replaces x_var by the monomial x^image (an exponent vector over the same variables).
    PowerSum substitute(std::size_t var, const Exponents &image) const;
    // Reorders variables: new variable perm[i] receives old variable i. Result has new_vars variables.
    PowerSum relabel(const std::vector<std::size_t> &perm, std::size_t new_vars) const;

private:
    std::size_t vars_;
    std::map<Exponents, Rational> terms_;
};

// phi(u) = (u^alpha + u^(1-alpha)) / 2, one variable.
PowerSum phi_power(const Rational &alpha);

// F(u, v) = (u^alpha v^(1-alpha) + u^(1-alpha) v^alpha) / 2, two variables.
PowerSum symmetric_homogeneous(const Rational &alpha);

// phi(u) - u phi(1/u) == 0 for a one-variable phi.
bool satisfies_reciprocal_equation(const PowerSum &phi);

// The three conditions on F(u, v): F(1,1) = 1, F(u,v) = F(v,u), F(cu,cv) = c F(u,v).
struct HomogeneityReport {
    bool normalized = false;
    bool symmetric = false;
    bool homogeneous = false;
    bool all() const { return normalized && symmetric && homogeneous; }
};
HomogeneityReport check_symmetric_homogeneous(const PowerSum &F);

// phi(u) = F(1, u), and back F(u, v) = v phi(u / v).
PowerSum phi_from_F(const PowerSum &F);
PowerSum F_from_phi(const PowerSum &phi);

// Sequence with EGF phi(e^{yt}): a_n = sum coeff * (e y)^n.
Sequence sequence_from_phi(const PowerSum &phi, const Rational &y, std::size_t n);

} // namespace eigenseq
