#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "eigenseq/rational.hpp"
#include "eigenseq/series.hpp"

namespace eigenseq {

// Dense univariate polynomial in x; coeffs[i] multiplies x^i. Trailing zeros are trimmed,
// so the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    const std::vector<Rational> &coeffs() const { return coeffs_; }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

    Rational operator()(const Rational &x) const;

    // p(x + y)
    Polynomial shifted(const Rational &y) const;

    friend Polynomial operator+(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator*(const Rational &c, const Polynomial &p);
    friend bool operator==(const Polynomial &, const Polynomial &) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Sequence of polynomials; polys[n] has degree <= n when produced by worpitzky().
struct PolySequence {
    std::vector<Polynomial> polys;
    std::string name;

    std::size_t size() const { return polys.size(); }
    friend bool operator==(const PolySequence &a, const PolySequence &b) { return a.polys == b.polys; }
};

// T(n, k) = sum_{m=0}^{k} (-1)^m C(k, m) (m+1)^n; zero for k > n and (-1)^n n! on the diagonal.
Rational worpitzky_weight(std::size_t n, std::size_t k);

// s_n(x) = sum_{k<=n} sum_{m<=k} (-1)^m C(k,m) s_k (x+m+1)^n, expanded in x.
PolySequence worpitzky(const Sequence &s);

Sequence poly_eval_sequence(const PolySequence &ps, const Rational &r);

// The unique a with worpitzky(a) evaluated at 0 equal to b (triangular solve).
Sequence worpify(const Sequence &b);

// x -> x + y in every polynomial.
PolySequence appell_shift(const PolySequence &ps, const Rational &y);

} // namespace eigenseq
