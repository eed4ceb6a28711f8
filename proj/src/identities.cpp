#include "eigenseq/identities.hpp"

#include <stdexcept>

#include "eigenseq/catalog.hpp"

namespace eigenseq {

namespace {

void require_terms(const Sequence &s, std::size_t n, const char *what) {
    if (s.size() < n) {
        throw std::invalid_argument(std::string(what) + ": need " + std::to_string(n) + " terms, got " +
                                    std::to_string(s.size()));
    }
}

Rational signed_power_of_two(std::size_t i, std::size_t n) {
    const Rational p = pow(Rational(2), n - i);
    return i % 2 == 0 ? p : -p;
}

void record(IdentityReport &r, std::size_t n, const Rational &lhs, const Rational &rhs) {
    r.max_n_checked = n;
    if (r.holds && !(lhs == rhs)) {
        r.holds = false;
        r.first_failure = IdentityFailure{n, lhs, rhs};
    }
}

} // namespace

IdentityReport check_ff(const Sequence &b, const Sequence &a, const Rational &h, const Rational &y, std::size_t N) {
    require_terms(b, N, "check_ff");
    require_terms(a, N, "check_ff");
    IdentityReport r{"ff", 0, true, std::nullopt};
    for (std::size_t n = 1; n < N; ++n) {
        Rational lhs;
        for (std::size_t i = 0; i <= n; ++i) {
            const Rational outer = binomial(n, i) * signed_power_of_two(i, n);
            for (std::size_t k = 0; 2 * k <= i; ++k) {
                if (b[2 * k].is_zero()) {
                    continue;
                }
                lhs += outer * binomial(i, 2 * k) * pow(y, n - 2 * k) * pow(h, 2 * k) * b[2 * k];
            }
        }
        record(r, n, lhs, a[n]);
        if (!r.holds) {
            break;
        }
    }
    return r;
}

IdentityReport check_catalan_motzkin(std::size_t N) {
    const auto c = get_sequence("catalan", N);
    const auto m = get_sequence("motzkin", N);
    IdentityReport r{"catalan-motzkin", 0, true, std::nullopt};
    for (std::size_t i = 0; i < N; ++i) {
        Rational lhs;
        for (std::size_t k = 0; 2 * k <= i; ++k) {
            lhs += binomial(i, 2 * k) * c[k];
        }
        record(r, i, lhs, m[i]);
        if (!r.holds) {
            break;
        }
    }
    return r;
}

IdentityReport check_self_binomial(const Sequence &a, std::size_t N) {
    require_terms(a, N, "check_self_binomial");
    IdentityReport r{"self-binomial", 0, true, std::nullopt};
    for (std::size_t n = 0; n < N; ++n) {
        Rational lhs;
        for (std::size_t i = 0; i <= n; ++i) {
            lhs += binomial(n, i) * signed_power_of_two(i, n) * a[i];
        }
        record(r, n, lhs, a[n]);
        if (!r.holds) {
            break;
        }
    }
    return r;
}

std::string describe(const IdentityReport &report) {
    if (report.holds) {
        return report.name + ": HOLDS for n <= " + std::to_string(report.max_n_checked);
    }
    const auto &f = *report.first_failure;
    return report.name + ": FAILS at n = " + std::to_string(f.n) + " (lhs " + f.lhs.to_string() + ", rhs " +
           f.rhs.to_string() + ")";
}

} // namespace eigenseq
