#include "eigenseq/eigen.hpp"

#include <stdexcept>

namespace eigenseq {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

Sequence geometric(const Rational &ratio, std::size_t n) {
    std::vector<Rational> t(n);
    Rational p(1);
    for (std::size_t i = 0; i < n; ++i) {
        t[i] = p;
        p *= ratio;
    }
    return Sequence(std::move(t));
}

} // namespace

FixedCheck is_fixed(const OperatorChain &chain, const Sequence &a) {
    const auto image = apply_chain(chain, a);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(image[i] == a[i])) {
            return FixedCheck{false, i};
        }
    }
    return FixedCheck{true, std::nullopt};
}

Sequence generic_fixed(const Rational &h, const Rational &y, std::size_t n) {
    if (h == Rational(1) || h == Rational(-1)) {
        throw std::domain_error("generic_fixed: h must not be 1 or -1");
    }
    return geometric(y / (Rational(1) - h), n);
}

Sequence fixed_from_even(const Sequence &seed, const Rational &h, const Rational &y) {
    for (std::size_t i = 1; i < seed.size(); i += 2) {
        if (!seed[i].is_zero()) {
            throw std::invalid_argument("fixed_from_even: seed has nonzero term at odd index " + std::to_string(i));
        }
    }
    return gen_binomial(seed, h, y);
}

Sequence phi_power_fixed(const Rational &alpha, std::size_t n) {
    const Rational beta = Rational(1) - alpha;
    const Rational half(1, 2);
    std::vector<Rational> t(n);
    Rational pa(1), pb(1);
    for (std::size_t i = 0; i < n; ++i) {
        t[i] = (pa + pb) * half;
        pa *= alpha;
        pb *= beta;
    }
    return Sequence(std::move(t));
}

Sequence lucas_half_fixed(std::size_t n) {
    std::vector<Rational> t(n);
    Rational prev(2), cur(1);
    const Rational half(1, 2);
    for (std::size_t i = 0; i < n; ++i) {
        t[i] = prev * half;
        Rational next = prev + cur;
        prev = cur;
        cur = next;
    }
    return Sequence(std::move(t));
}

Sequence shift_fixed(const Sequence &a, std::size_t m) {
    if (m == 0) {
        return a;
    }
    const std::size_t shift = 2 * m;
    const auto egf = sequence_to_egf(a);
    std::vector<Rational> c(a.size());
    for (std::size_t i = shift; i < c.size(); ++i) {
        c[i] = egf[i - shift];
    }
    auto out = egf_to_sequence(TruncatedSeries(std::move(c), SeriesKind::EGF));
    out.name = a.name;
    return out;
}

Sequence il_fixed(const Rational &x, const Rational &y, const Rational &h, std::size_t n, std::optional<Rational> c) {
    if (x.is_zero()) {
        throw std::domain_error("il_fixed: x must be nonzero");
    }
    if (h.is_zero()) {
        throw std::domain_error("il_fixed: h must be nonzero");
    }
    if (h == Rational(1)) {
        if (!(x + y).is_zero()) {
            throw std::domain_error("il_fixed: no fixed sequence for h = 1 and x + y != 0");
        }
        if (!c) {
            throw std::invalid_argument("il_fixed: h = 1 and x + y = 0 needs an explicit constant c");
        }
        return geometric(*c, n);
    }
    return geometric(-(x + y) / (h - Rational(1)), n);
}

Sequence rev_l_fixed(const Rational &y, std::size_t n) { return geometric(-y / Rational(2), n); }

Sequence rev_i_fixed(const Rational &x, std::size_t n) { return geometric(-x / Rational(2), n); }

Sequence generate(const FixedFamily &fam, std::size_t n) {
    return std::visit(
        overloaded{
            [&](const family::GenericLhy &f) { return generic_fixed(f.h, f.y, n); },
            [&](const family::EvenSeed &f) {
                if (f.seed.size() < n) {
                    throw std::invalid_argument("EvenSeed: seed shorter than requested length");
                }
                Sequence seed(std::vector<Rational>(f.seed.terms.begin(), f.seed.terms.begin() + n));
                return fixed_from_even(seed, f.h, f.y);
            },
            [&](const family::PhiPower &f) { return phi_power_fixed(f.alpha, n); },
            [&](const family::LucasHalf &) { return lucas_half_fixed(n); },
            [&](const family::Shifted &f) { return shift_fixed(generate(*f.base, n), f.m); },
            [&](const family::ILFixed &f) { return il_fixed(f.x, f.y, f.h, n, f.c); },
            [&](const family::RevLFixed &f) { return rev_l_fixed(f.y, n); },
            [&](const family::RevIFixed &f) { return rev_i_fixed(f.x, n); },
        },
        fam);
}

OperatorChain fixing_chain(const FixedFamily &fam) {
    return std::visit(
        overloaded{
            [](const family::GenericLhy &f) { return OperatorChain{GenBinomial{f.h, f.y}}; },
            [](const family::EvenSeed &f) { return OperatorChain{GenBinomial{Rational(-1), Rational(2) * f.y}}; },
            [](const family::PhiPower &) { return OperatorChain{GenBinomial{Rational(-1), Rational(1)}}; },
            [](const family::LucasHalf &) { return OperatorChain{GenBinomial{Rational(-1), Rational(1)}}; },
            [](const family::Shifted &f) { return fixing_chain(*f.base); },
            [](const family::ILFixed &f) { return OperatorChain{Invert{f.x}, GenBinomial{f.h, f.y}}; },
            [](const family::RevLFixed &f) { return OperatorChain{Revert{}, GenBinomial{Rational(1), f.y}}; },
            [](const family::RevIFixed &f) { return OperatorChain{Revert{}, Invert{f.x}}; },
        },
        fam);
}

} // namespace eigenseq
