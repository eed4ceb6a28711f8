#include "eigenseq/series.hpp"

#include <stdexcept>

namespace eigenseq {

namespace {

void require_compatible(const TruncatedSeries &f, const TruncatedSeries &g, const char *op) {
    if (f.kind() != g.kind()) {
        throw std::invalid_argument(std::string(op) + ": series kind mismatch");
    }
    if (f.order() != g.order()) {
        throw std::invalid_argument(std::string(op) + ": truncation order mismatch (" +
                                    std::to_string(f.order()) + " vs " + std::to_string(g.order()) + ")");
    }
}

} // namespace

Sequence make_sequence(std::initializer_list<long> values, std::string name) {
    std::vector<Rational> terms;
    terms.reserve(values.size());
    for (long v : values) {
        terms.emplace_back(v);
    }
    return Sequence(std::move(terms), std::move(name));
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs, SeriesKind kind)
    : coeffs_(std::move(coeffs)), kind_(kind) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("truncated series needs order >= 1");
    }
}

TruncatedSeries TruncatedSeries::zero(std::size_t order, SeriesKind kind) {
    return TruncatedSeries(std::vector<Rational>(order), kind);
}

TruncatedSeries TruncatedSeries::one(std::size_t order, SeriesKind kind) {
    std::vector<Rational> c(order);
    if (order > 0) {
        c[0] = 1;
    }
    return TruncatedSeries(std::move(c), kind);
}

TruncatedSeries TruncatedSeries::identity(std::size_t order, SeriesKind kind) {
    std::vector<Rational> c(order);
    if (order > 1) {
        c[1] = 1;
    }
    return TruncatedSeries(std::move(c), kind);
}

TruncatedSeries ps_add(const TruncatedSeries &f, const TruncatedSeries &g) {
    require_compatible(f, g, "ps_add");
    std::vector<Rational> c(f.order());
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = f[i] + g[i];
    }
    return TruncatedSeries(std::move(c), f.kind());
}

TruncatedSeries ps_sub(const TruncatedSeries &f, const TruncatedSeries &g) {
    require_compatible(f, g, "ps_sub");
    std::vector<Rational> c(f.order());
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = f[i] - g[i];
    }
    return TruncatedSeries(std::move(c), f.kind());
}

TruncatedSeries ps_scale(const TruncatedSeries &f, const Rational &s) {
    std::vector<Rational> c(f.coeffs().begin(), f.coeffs().end());
    for (auto &x : c) {
        x *= s;
    }
    return TruncatedSeries(std::move(c), f.kind());
}

TruncatedSeries ps_mul(const TruncatedSeries &f, const TruncatedSeries &g) {
    require_compatible(f, g, "ps_mul");
    const std::size_t n = f.order();
    std::vector<Rational> c(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (f[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j < n; ++j) {
            if (!g[j].is_zero()) {
                c[i + j] += f[i] * g[j];
            }
        }
    }
    return TruncatedSeries(std::move(c), f.kind());
}

TruncatedSeries ps_div(const TruncatedSeries &f, const TruncatedSeries &g) {
    require_compatible(f, g, "ps_div");
    if (g[0].is_zero()) {
        throw std::domain_error("ps_div: divisor has zero constant term");
    }
    const std::size_t n = f.order();
    const Rational inv0 = Rational(1) / g[0];
    std::vector<Rational> q(n);
    for (std::size_t k = 0; k < n; ++k) {
        Rational acc = f[k];
        for (std::size_t j = 1; j <= k; ++j) {
            acc -= g[j] * q[k - j];
        }
        q[k] = acc * inv0;
    }
    return TruncatedSeries(std::move(q), f.kind());
}

TruncatedSeries ps_derivative(const TruncatedSeries &f) {
    std::vector<Rational> c(f.order());
    for (std::size_t i = 1; i < f.order(); ++i) {
        c[i - 1] = f[i] * Rational(static_cast<long>(i));
    }
    return TruncatedSeries(std::move(c), f.kind());
}

TruncatedSeries ps_compose(const TruncatedSeries &f, const TruncatedSeries &g) {
    if (f.order() != g.order()) {
        throw std::invalid_argument("ps_compose: truncation order mismatch");
    }
    if (!g[0].is_zero()) {
        throw std::domain_error("ps_compose: inner series must have zero constant term");
    }
    // Horner: (((f_{N-1}) g + f_{N-2}) g + ...) g + f_0, all products mod t^N.
    const TruncatedSeries inner(std::vector<Rational>(g.coeffs().begin(), g.coeffs().end()), f.kind());
    auto acc = TruncatedSeries::zero(f.order(), f.kind());
    for (std::size_t k = f.order(); k-- > 0;) {
        const auto prod = ps_mul(acc, inner);
        std::vector<Rational> c(prod.coeffs().begin(), prod.coeffs().end());
        c[0] += f[k];
        acc = TruncatedSeries(std::move(c), f.kind());
    }
    return acc;
}

TruncatedSeries ps_reversion(const TruncatedSeries &f) {
    if (f.order() < 2) {
        throw std::invalid_argument("ps_reversion: order must be at least 2");
    }
    if (!f[0].is_zero() || f[1].is_zero()) {
        throw std::domain_error("ps_reversion: need f(0) = 0 and f'(0) != 0");
    }
    const std::size_t n = f.order();
    const auto u = TruncatedSeries::identity(n, f.kind());
    const auto df = ps_derivative(f);

    // Newton step g <- g - (f(g) - u) / f'(g); the number of correct coefficients doubles each pass.
    TruncatedSeries g = ps_scale(u, Rational(1) / f[1]);
    for (std::size_t correct = 2; correct < n; correct *= 2) {
        const auto residual = ps_sub(ps_compose(f, g), u);
        g = ps_sub(g, ps_div(residual, ps_compose(df, g)));
    }
    return g;
}

TruncatedSeries exp_series(const Rational &y, std::size_t order) {
    std::vector<Rational> c(order);
    Rational term(1);
    for (std::size_t n = 0; n < order; ++n) {
        c[n] = term;
        term = term * y / Rational(static_cast<long>(n + 1));
    }
    return TruncatedSeries(std::move(c), SeriesKind::EGF);
}

TruncatedSeries sequence_to_egf(const Sequence &a) {
    std::vector<Rational> c(a.size());
    Rational fact(1);
    for (std::size_t n = 0; n < a.size(); ++n) {
        if (n > 0) {
            fact *= Rational(static_cast<long>(n));
        }
        c[n] = a[n] / fact;
    }
    return TruncatedSeries(std::move(c), SeriesKind::EGF);
}

Sequence egf_to_sequence(const TruncatedSeries &f) {
    if (f.kind() != SeriesKind::EGF) {
        throw std::invalid_argument("egf_to_sequence: series is not an EGF");
    }
    std::vector<Rational> t(f.order());
    Rational fact(1);
    for (std::size_t n = 0; n < f.order(); ++n) {
        if (n > 0) {
            fact *= Rational(static_cast<long>(n));
        }
        t[n] = f[n] * fact;
    }
    return Sequence(std::move(t));
}

TruncatedSeries sequence_to_ogf(const Sequence &a) { return TruncatedSeries(a.terms, SeriesKind::OGF); }

Sequence ogf_to_sequence(const TruncatedSeries &f) {
    if (f.kind() != SeriesKind::OGF) {
        throw std::invalid_argument("ogf_to_sequence: series is not an OGF");
    }
    return Sequence(std::vector<Rational>(f.coeffs().begin(), f.coeffs().end()));
}

} // namespace eigenseq
