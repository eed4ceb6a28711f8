#include "eigenseq/operators.hpp"

#include <stdexcept>

namespace eigenseq {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

} // namespace

OperatorChain::OperatorChain(std::vector<OperatorSpec> ops) : ops_(std::move(ops)) {
    if (ops_.empty()) {
        throw std::invalid_argument("operator chain must not be empty");
    }
}

std::string to_string(const OperatorSpec &op) {
    return std::visit(overloaded{
                          [](const Invert &i) { return "I:x=" + i.x.to_string(); },
                          [](const GenBinomial &l) { return "L:h=" + l.h.to_string() + ",y=" + l.y.to_string(); },
                          [](const Revert &) { return std::string("R"); },
                      },
                      op);
}

std::string to_string(const OperatorChain &chain) {
    std::string out;
    for (const auto &op : chain.ops()) {
        if (!out.empty()) {
            out += ',';
        }
        out += to_string(op);
    }
    return out;
}

Sequence gen_binomial(const Sequence &a, const Rational &h, const Rational &y) {
    const std::size_t n = a.size();
    std::vector<Rational> hp(n), yp(n);
    for (std::size_t i = 0; i < n; ++i) {
        hp[i] = i == 0 ? Rational(1) : hp[i - 1] * h;
        yp[i] = i == 0 ? Rational(1) : yp[i - 1] * y;
    }
    // Pascal row reused across n; with 0^0 = 1 the h = 0 and y = 0 extensions fall out of the sum.
    std::vector<Rational> row{Rational(1)};
    std::vector<Rational> b(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0) {
            std::vector<Rational> next(k + 1);
            next[0] = 1;
            next[k] = 1;
            for (std::size_t i = 1; i < k; ++i) {
                next[i] = row[i - 1] + row[i];
            }
            row = std::move(next);
        }
        Rational acc;
        for (std::size_t i = 0; i <= k; ++i) {
            if (!a[i].is_zero()) {
                acc += row[i] * hp[i] * yp[k - i] * a[i];
            }
        }
        b[k] = acc;
    }
    return Sequence(std::move(b));
}

Sequence gen_binomial_ogf(const Sequence &a, const Rational &h, const Rational &y) {
    if (h.is_zero()) {
        throw std::domain_error("gen_binomial_ogf: h = 0 is not covered by the substitution formula");
    }
    const std::size_t n = a.size();
    if (n == 0) {
        return Sequence{};
    }
    // Work mod t^(n+1) since A carries an extra factor t.
    std::vector<Rational> shifted(n + 1), subst(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        shifted[i + 1] = a[i];
    }
    Rational coeff = h;
    for (std::size_t k = 1; k <= n; ++k) {
        subst[k] = coeff;
        coeff *= y;
    }
    const auto composed = ps_compose(TruncatedSeries(std::move(shifted), SeriesKind::OGF),
                                     TruncatedSeries(std::move(subst), SeriesKind::OGF));
    std::vector<Rational> b(n);
    for (std::size_t i = 0; i < n; ++i) {
        b[i] = composed[i + 1] / h;
    }
    return Sequence(std::move(b));
}

Sequence invert(const Sequence &a, const Rational &x) {
    if (a.size() == 0) {
        return Sequence{};
    }
    const auto A = sequence_to_ogf(a);
    // 1 - x t A(t)
    std::vector<Rational> den(a.size());
    den[0] = 1;
    for (std::size_t i = 1; i < a.size(); ++i) {
        den[i] = -x * a[i - 1];
    }
    return ogf_to_sequence(ps_div(A, TruncatedSeries(std::move(den), SeriesKind::OGF)));
}

Sequence revert(const Sequence &a) {
    if (a.size() == 0 || a[0].is_zero()) {
        throw std::domain_error("revert: first term must be nonzero");
    }
    const std::size_t n = a.size();
    std::vector<Rational> u(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        u[i + 1] = a[i];
    }
    const auto inv = ps_reversion(TruncatedSeries(std::move(u), SeriesKind::OGF));
    std::vector<Rational> b(n);
    for (std::size_t i = 0; i < n; ++i) {
        b[i] = inv[i + 1];
    }
    return Sequence(std::move(b));
}

Sequence apply(const OperatorSpec &op, const Sequence &a) {
    return std::visit(overloaded{
                          [&](const Invert &i) { return invert(a, i.x); },
                          [&](const GenBinomial &l) { return gen_binomial(a, l.h, l.y); },
                          [&](const Revert &) { return revert(a); },
                      },
                      op);
}

Sequence apply_chain(const OperatorChain &chain, const Sequence &a) {
    Sequence cur = a;
    for (auto it = chain.ops().rbegin(); it != chain.ops().rend(); ++it) {
        cur = eigenseq::apply(*it, cur);
    }
    cur.name = a.name;
    return cur;
}

} // namespace eigenseq
