#include "eigenseq/worpitzky.hpp"

#include <algorithm>

namespace eigenseq {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Rational Polynomial::operator()(const Rational &x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial Polynomial::shifted(const Rational &y) const {
    // sum_i c_i (x+y)^i = sum_d x^d sum_{i>=d} c_i C(i,d) y^(i-d)
    std::vector<Rational> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) {
            continue;
        }
        Rational ypow(1);
        for (std::size_t d = i + 1; d-- > 0;) {
            out[d] += coeffs_[i] * binomial(i, d) * ypow;
            ypow *= y;
        }
    }
    return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial &a, const Polynomial &b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = a.coeff(i) + b.coeff(i);
    }
    return Polynomial(std::move(out));
}

Polynomial operator*(const Rational &c, const Polynomial &p) {
    std::vector<Rational> out = p.coeffs_;
    for (auto &x : out) {
        x *= c;
    }
    return Polynomial(std::move(out));
}

Rational worpitzky_weight(std::size_t n, std::size_t k) {
    Rational acc;
    for (std::size_t m = 0; m <= k; ++m) {
        const Rational term = binomial(k, m) * pow(Rational(static_cast<long>(m + 1)), n);
        if (m % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    return acc;
}

namespace {

// weights[j][k] = T(j, k) for k <= j < n.
std::vector<std::vector<Rational>> weight_table(std::size_t n) {
    std::vector<std::vector<Rational>> w(n);
    for (std::size_t j = 0; j < n; ++j) {
        w[j].resize(j + 1);
        for (std::size_t k = 0; k <= j; ++k) {
            w[j][k] = worpitzky_weight(j, k);
        }
    }
    return w;
}

} // namespace

PolySequence worpitzky(const Sequence &s) {
    // Expanding (x+m+1)^n, the coefficient of x^d is C(n,d) (m+1)^(n-d), so
    // [x^d] s_n(x) = C(n,d) sum_k s_k T(n-d, k), and T(n-d, k) vanishes for k > n-d.
    const std::size_t n = s.size();
    const auto w = weight_table(n);
    std::vector<Rational> inner(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k <= j; ++k) {
            inner[j] += s[k] * w[j][k];
        }
    }
    PolySequence out;
    out.name = s.name;
    out.polys.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> c(i + 1);
        for (std::size_t d = 0; d <= i; ++d) {
            c[d] = binomial(i, d) * inner[i - d];
        }
        out.polys.emplace_back(std::move(c));
    }
    return out;
}

Sequence poly_eval_sequence(const PolySequence &ps, const Rational &r) {
    std::vector<Rational> t;
    t.reserve(ps.size());
    for (const auto &p : ps.polys) {
        t.push_back(p(r));
    }
    return Sequence(std::move(t), ps.name);
}

Sequence worpify(const Sequence &b) {
    // Row n: b_n = sum_{k<=n} T(n,k) a_k, with T(n,n) = (-1)^n n! != 0.
    const std::size_t n = b.size();
    const auto w = weight_table(n);
    std::vector<Rational> a(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational rhs = b[i];
        for (std::size_t k = 0; k < i; ++k) {
            rhs -= w[i][k] * a[k];
        }
        a[i] = rhs / w[i][i];
    }
    return Sequence(std::move(a), b.name);
}

PolySequence appell_shift(const PolySequence &ps, const Rational &y) {
    PolySequence out;
    out.name = ps.name;
    out.polys.reserve(ps.size());
    for (const auto &p : ps.polys) {
        out.polys.push_back(p.shifted(y));
    }
    return out;
}

} // namespace eigenseq
