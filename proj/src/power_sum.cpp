#include "eigenseq/power_sum.hpp"

#include <stdexcept>

namespace eigenseq {

PowerSum PowerSum::constant(std::size_t vars, const Rational &c) {
    PowerSum p(vars);
    p.add_term(Exponents(vars), c);
    return p;
}

PowerSum PowerSum::monomial(const Exponents &e, const Rational &c) {
    PowerSum p(e.size());
    p.add_term(e, c);
    return p;
}

PowerSum &PowerSum::add_term(const Exponents &e, const Rational &c) {
    if (e.size() != vars_) {
        throw std::invalid_argument("PowerSum: exponent vector has wrong arity");
    }
    if (c.is_zero()) {
        return *this;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
    return *this;
}

PowerSum operator+(const PowerSum &a, const PowerSum &b) {
    if (a.vars_ != b.vars_) {
        throw std::invalid_argument("PowerSum: arity mismatch");
    }
    PowerSum r = a;
    for (const auto &[e, c] : b.terms_) {
        r.add_term(e, c);
    }
    return r;
}

PowerSum operator-(const PowerSum &a, const PowerSum &b) {
    if (a.vars_ != b.vars_) {
        throw std::invalid_argument("PowerSum: arity mismatch");
    }
    PowerSum r = a;
    for (const auto &[e, c] : b.terms_) {
        r.add_term(e, -c);
    }
    return r;
}

PowerSum operator*(const PowerSum &a, const PowerSum &b) {
    if (a.vars_ != b.vars_) {
        throw std::invalid_argument("PowerSum: arity mismatch");
    }
    PowerSum r(a.vars_);
    for (const auto &[ea, ca] : a.terms_) {
        for (const auto &[eb, cb] : b.terms_) {
            PowerSum::Exponents e(a.vars_);
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

PowerSum PowerSum::substitute(std::size_t var, const Exponents &image) const {
    if (var >= vars_ || image.size() != vars_) {
        throw std::invalid_argument("PowerSum::substitute: bad variable or image");
    }
    PowerSum r(vars_);
    for (const auto &[e, c] : terms_) {
        Exponents ne = e;
        const Rational k = e[var];
        ne[var] = 0;
        for (std::size_t i = 0; i < vars_; ++i) {
            ne[i] += k * image[i];
        }
        r.add_term(ne, c);
    }
    return r;
}

PowerSum PowerSum::relabel(const std::vector<std::size_t> &perm, std::size_t new_vars) const {
    if (perm.size() != vars_) {
        throw std::invalid_argument("PowerSum::relabel: permutation has wrong size");
    }
    PowerSum r(new_vars);
    for (const auto &[e, c] : terms_) {
        Exponents ne(new_vars);
        for (std::size_t i = 0; i < vars_; ++i) {
            if (!e[i].is_zero()) {
                if (perm[i] >= new_vars) {
                    throw std::invalid_argument("PowerSum::relabel: dropping a variable that occurs");
                }
                ne[perm[i]] += e[i];
            }
        }
        r.add_term(ne, c);
    }
    return r;
}

PowerSum phi_power(const Rational &alpha) {
    const Rational half(1, 2);
    PowerSum p(1);
    p.add_term({alpha}, half);
    p.add_term({Rational(1) - alpha}, half);
    return p;
}

PowerSum symmetric_homogeneous(const Rational &alpha) {
    const Rational half(1, 2);
    const Rational beta = Rational(1) - alpha;
    PowerSum p(2);
    p.add_term({alpha, beta}, half);
    p.add_term({beta, alpha}, half);
    return p;
}

bool satisfies_reciprocal_equation(const PowerSum &phi) {
    if (phi.vars() != 1) {
        throw std::invalid_argument("satisfies_reciprocal_equation: phi must be univariate");
    }
    const auto u = PowerSum::monomial({Rational(1)});
    const auto reflected = phi.substitute(0, {Rational(-1)});
    return (phi - u * reflected).is_zero();
}

HomogeneityReport check_symmetric_homogeneous(const PowerSum &F) {
    if (F.vars() != 2) {
        throw std::invalid_argument("check_symmetric_homogeneous: F must have two variables");
    }
    HomogeneityReport r;
    const auto at_ones = F.substitute(0, {0, 0}).substitute(1, {0, 0});
    r.normalized = at_ones == PowerSum::constant(2, Rational(1));
    r.symmetric = F.relabel({1, 0}, 2) == F;
    // Third variable c: F(cu, cv) - c F(u, v).
    const auto lifted = F.relabel({0, 1}, 3);
    const auto scaled = lifted.substitute(0, {1, 0, 1}).substitute(1, {0, 1, 1});
    r.homogeneous = (scaled - PowerSum::monomial({0, 0, 1}) * lifted).is_zero();
    return r;
}

PowerSum phi_from_F(const PowerSum &F) {
    if (F.vars() != 2) {
        throw std::invalid_argument("phi_from_F: F must have two variables");
    }
    return F.substitute(0, {0, 0}).relabel({1, 0}, 1);
}

PowerSum F_from_phi(const PowerSum &phi) {
    if (phi.vars() != 1) {
        throw std::invalid_argument("F_from_phi: phi must be univariate");
    }
    // v * phi(u / v)
    const auto lifted = phi.relabel({0}, 2).substitute(0, {1, -1});
    return PowerSum::monomial({0, 1}) * lifted;
}

Sequence sequence_from_phi(const PowerSum &phi, const Rational &y, std::size_t n) {
    if (phi.vars() != 1) {
        throw std::invalid_argument("sequence_from_phi: phi must be univariate");
    }
    std::vector<Rational> t(n);
    for (const auto &[e, c] : phi.terms()) {
        const Rational rate = e[0] * y;
        Rational p(1);
        for (std::size_t i = 0; i < n; ++i) {
            t[i] += c * p;
            p *= rate;
        }
    }
    return Sequence(std::move(t));
}

} // namespace eigenseq
