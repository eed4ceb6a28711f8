#include <doctest.h>

#include <stdexcept>

#include "eigenseq/catalog.hpp"
#include "eigenseq/eigen.hpp"
#include "eigenseq/power_sum.hpp"
#include "oracles.hpp"

using namespace eigenseq;

namespace {

OperatorChain L(const Rational &h, const Rational &y) { return OperatorChain{GenBinomial{h, y}}; }

Sequence geometric(const Rational &r, std::size_t n) {
    std::vector<Rational> t(n);
    for (std::size_t i = 0; i < n; ++i) {
        t[i] = pow(r, i);
    }
    return Sequence(std::move(t));
}

} // namespace

TEST_CASE("generic_fixed") {
    const auto a = generic_fixed(3, 2, 10);
    CHECK(a == geometric(-1, 10));
    CHECK(is_fixed(L(3, 2), a));

    CHECK(generic_fixed(5, 0, 5) == make_sequence({1, 0, 0, 0, 0}));
    CHECK(is_fixed(L(5, 0), generic_fixed(5, 0, 12)));

    const auto ones = generic_fixed(Rational(1, 2), Rational(1, 2), 8);
    CHECK(ones == make_sequence({1, 1, 1, 1, 1, 1, 1, 1}));
    CHECK(is_fixed(L(Rational(1, 2), Rational(1, 2)), ones));

    CHECK_THROWS_AS(generic_fixed(1, 2, 4), std::domain_error);
    CHECK_THROWS_AS(generic_fixed(-1, 2, 4), std::domain_error);
}

TEST_CASE("generic_fixed is fixed and unique under single-term perturbation") {
    oracle::Generator gen(2024);
    for (int trial = 0; trial < 50; ++trial) {
        const auto h = gen.rational_except({0, 1, -1});
        const auto y = gen.rational();
        const auto a = generic_fixed(h, y, 32);
        REQUIRE(is_fixed(L(h, y), a));

        if (y.is_zero()) {
            continue;
        }
        // Changing any one term breaks fixedness.
        for (std::size_t i = 0; i < 12; ++i) {
            auto b = a;
            b[i] += gen.nonzero_rational();
            const auto check = is_fixed(L(h, y), b);
            CHECK_FALSE(check.fixed);
            REQUIRE(check.first_mismatch.has_value());
        }
    }
}

TEST_CASE("is_fixed examples") {
    CHECK(is_fixed(L(-1, 2), get_sequence("motzkin", 32)));
    CHECK(is_fixed(L(-1, 4), get_sequence("central_binomial", 32)));
    const auto r = is_fixed(L(2, 1), make_sequence({1, 1, 1, 1}));
    CHECK_FALSE(r.fixed);
    CHECK(r.first_mismatch == std::optional<std::size_t>(1));
}

TEST_CASE("degenerate cases of the generalized binomial") {
    oracle::Generator gen(8);
    for (int trial = 0; trial < 20; ++trial) {
        // Every even sequence is fixed by L^(-1,0).
        CHECK(is_fixed(L(-1, 0), gen.even_sequence(32)));
        // L^(1,0) is the identity.
        CHECK(is_fixed(L(1, 0), gen.sequence(32)));
        // L^(1,y), y != 0, fixes nothing with a_0 = 1.
        CHECK_FALSE(is_fixed(L(1, gen.nonzero_rational()), gen.sequence(16, true)).fixed);
    }
}

TEST_CASE("fixed_from_even") {
    const auto motzkin = fixed_from_even(get_sequence("catalan_aerated", 24), 1, 1);
    CHECK(motzkin == get_sequence("motzkin", 24));
    CHECK(is_fixed(L(-1, 2), motzkin));

    const Rational y(-7, 3);
    const auto unit = fixed_from_even(make_sequence({1, 0, 0, 0, 0, 0}), 1, y);
    CHECK(unit == geometric(y, 6));
    CHECK(is_fixed(L(-1, 2 * y), unit));

    const auto fib = fixed_from_even(get_sequence("fibonacci_aerated", 32), 1, 1);
    CHECK(fib == get_sequence("a101890", 32));
    CHECK(is_fixed(L(-1, 2), fib));

    CHECK_THROWS_AS(fixed_from_even(make_sequence({1, 1, 0}), 1, 1), std::invalid_argument);

    oracle::Generator gen(31);
    for (int trial = 0; trial < 25; ++trial) {
        const auto h = gen.rational();
        const auto yy = gen.rational();
        CHECK(is_fixed(L(-1, 2 * yy), fixed_from_even(gen.even_sequence(20, false), h, yy)));
    }
}

TEST_CASE("phi_power_fixed") {
    CHECK(phi_power_fixed(Rational(1, 2), 5) ==
          Sequence({1, Rational(1, 2), Rational(1, 4), Rational(1, 8), Rational(1, 16)}));
    CHECK(phi_power_fixed(1, 4) == Sequence({1, Rational(1, 2), Rational(1, 2), Rational(1, 2)}));
    CHECK(phi_power_fixed(2, 5) ==
          Sequence({1, Rational(1, 2), Rational(5, 2), Rational(7, 2), Rational(17, 2)}));
    oracle::Generator gen(77);
    for (int trial = 0; trial < 20; ++trial) {
        CHECK(is_fixed(L(-1, 1), phi_power_fixed(gen.rational(), 32)));
    }
}

TEST_CASE("lucas_half_fixed") {
    const auto a = lucas_half_fixed(6);
    CHECK(a == Sequence({1, Rational(1, 2), Rational(3, 2), 2, Rational(7, 2), Rational(11, 2)}));
    const auto long_run = lucas_half_fixed(32);
    CHECK(is_fixed(L(-1, 1), long_run));
    for (std::size_t i = 0; i < long_run.size(); ++i) {
        CHECK((Rational(2) * long_run[i]).is_integer());
    }
}

TEST_CASE("shift_fixed") {
    const auto shifted = shift_fixed(get_sequence("motzkin", 12), 1);
    // n (n-1) M_{n-2}
    CHECK(shifted == make_sequence({0, 0, 2, 6, 24, 80, 270, 882, 2856, 9144, 29070, 91850}));
    CHECK(is_fixed(L(-1, 2), shift_fixed(get_sequence("motzkin", 32), 1)));
    CHECK(is_fixed(L(-1, 2), shift_fixed(get_sequence("motzkin", 32), 3)));

    const auto a = make_sequence({3, 1, 4, 1, 5});
    CHECK(shift_fixed(a, 0) == a);

    const auto t2 = shift_fixed(make_sequence({1, 0, 0, 0, 0}), 1);
    CHECK(t2 == make_sequence({0, 0, 2, 0, 0}));
    CHECK(is_fixed(L(-1, 0), t2));
}

TEST_CASE("closure of fixed sequences of L^(-1,y)") {
    oracle::Generator gen(5150);
    for (int trial = 0; trial < 15; ++trial) {
        const auto y = gen.rational();
        const std::size_t n = 24;
        const auto a = fixed_from_even(gen.even_sequence(n), 1, y / 2);
        const auto b = phi_power_fixed(gen.rational(), n);
        const auto b_y = gen_binomial(b, y, 0); // EGF B(yt): fixed by L^(-1, y)
        REQUIRE(is_fixed(L(-1, y), a));
        REQUIRE(is_fixed(L(-1, y), b_y));

        const auto lambda = gen.rational();
        const auto mu = gen.rational();
        std::vector<Rational> combo(n);
        for (std::size_t i = 0; i < n; ++i) {
            combo[i] = lambda * a[i] + mu * b_y[i];
        }
        CHECK(is_fixed(L(-1, y), Sequence(combo)));

        // Product of EGFs: fixed for the sum of the parameters.
        const auto y2 = gen.rational();
        const auto c = fixed_from_even(gen.even_sequence(n), 1, y2 / 2);
        const auto prod = egf_to_sequence(ps_mul(sequence_to_egf(a), sequence_to_egf(c)));
        CHECK(is_fixed(L(-1, y + y2), prod));

        // Multiplying by an even EGF keeps the parameter.
        const auto even = gen.even_sequence(n);
        const auto scaled = egf_to_sequence(ps_mul(sequence_to_egf(a), sequence_to_egf(even)));
        CHECK(is_fixed(L(-1, y), scaled));
    }
}

TEST_CASE("il_fixed") {
    const auto a = il_fixed(1, 1, 3, 10);
    CHECK(a == geometric(-1, 10));
    CHECK(is_fixed(OperatorChain{Invert{1}, GenBinomial{3, 1}}, a));

    const auto c = il_fixed(1, -1, 1, 10, Rational(2));
    CHECK(c == geometric(2, 10));
    CHECK(is_fixed(OperatorChain{Invert{1}, GenBinomial{1, -1}}, c));

    const auto ones = il_fixed(2, 0, -1, 10);
    CHECK(ones == geometric(1, 10));
    CHECK(is_fixed(OperatorChain{Invert{2}, GenBinomial{-1, 0}}, ones));

    CHECK_THROWS_AS(il_fixed(1, 1, 1, 5), std::domain_error);
    CHECK_THROWS_AS(il_fixed(1, -1, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(il_fixed(0, 1, 3, 5), std::domain_error);
    CHECK_THROWS_AS(il_fixed(1, 1, 0, 5), std::domain_error);

    oracle::Generator gen(606);
    for (int trial = 0; trial < 25; ++trial) {
        const auto x = gen.nonzero_rational();
        const auto y = gen.rational();
        const auto h = gen.rational_except({0, 1});
        CHECK(is_fixed(OperatorChain{Invert{x}, GenBinomial{h, y}}, il_fixed(x, y, h, 24)));
    }
}

TEST_CASE("rev_l_fixed and rev_i_fixed") {
    CHECK(rev_l_fixed(2, 8) == geometric(-1, 8));
    CHECK(is_fixed(OperatorChain{Revert{}, GenBinomial{1, 2}}, rev_l_fixed(2, 32)));
    CHECK(rev_l_fixed(0, 5) == make_sequence({1, 0, 0, 0, 0}));
    CHECK(is_fixed(OperatorChain{Revert{}, GenBinomial{1, 0}}, rev_l_fixed(0, 16)));
    CHECK(rev_i_fixed(2, 8) == geometric(-1, 8));
    CHECK(is_fixed(OperatorChain{Revert{}, Invert{2}}, rev_i_fixed(2, 32)));
}

TEST_CASE("revert after generalized binomial has geometric fixed points for every h != -1") {
    // The geometric sequence with ratio -y/(1+h) is fixed by R o L^(h,y): L sends it to
    // ratio h r + y, and reverting a geometric sequence of ratio s gives ratio -s.
    oracle::Generator gen(4321);
    for (int trial = 0; trial < 20; ++trial) {
        const auto h = gen.rational_except({-1, 1});
        const auto y = gen.nonzero_rational();
        const auto a = geometric(-y / (Rational(1) + h), 20);
        CHECK(is_fixed(OperatorChain{Revert{}, GenBinomial{h, y}}, a));
        // The h = 1 formula does not carry over.
        CHECK_FALSE(is_fixed(OperatorChain{Revert{}, GenBinomial{h, y}}, rev_l_fixed(y, 20)).fixed);
    }
}

TEST_CASE("fixed families know their operator") {
    const auto motzkin_family = std::make_shared<const FixedFamily>(
        family::EvenSeed{1, 1, get_sequence("catalan_aerated", 32)});
    const std::vector<FixedFamily> families{
        family::GenericLhy{Rational(3, 2), Rational(-4, 5)},
        *motzkin_family,
        family::PhiPower{Rational(-2, 7)},
        family::LucasHalf{},
        family::Shifted{motzkin_family, 2},
        family::ILFixed{Rational(1, 3), 2, Rational(5, 2), std::nullopt},
        family::ILFixed{3, -3, 1, Rational(-4, 9)},
        family::RevLFixed{Rational(7, 3)},
        family::RevIFixed{-5},
    };
    for (const auto &f : families) {
        const auto a = generate(f, 24);
        CHECK(a.size() == 24);
        CHECK(is_fixed(fixing_chain(f), a));
    }
}

TEST_CASE("phi functional equation and the homogeneous symmetric construction") {
    oracle::Generator gen(1);
    for (int trial = 0; trial < 25; ++trial) {
        const auto alpha = gen.rational();
        const auto phi = phi_power(alpha);
        CHECK(satisfies_reciprocal_equation(phi));

        const auto F = symmetric_homogeneous(alpha);
        const auto report = check_symmetric_homogeneous(F);
        CHECK(report.normalized);
        CHECK(report.symmetric);
        CHECK(report.homogeneous);
        CHECK(phi_from_F(F) == phi);
        CHECK(check_symmetric_homogeneous(F_from_phi(phi)).all());
        CHECK(F_from_phi(phi) == F);

        // EGF phi(e^t) gives the phi_power_fixed sequence.
        CHECK(sequence_from_phi(phi, 1, 20) == phi_power_fixed(alpha, 20));
        const auto y = gen.nonzero_rational();
        CHECK(is_fixed(L(-1, y), sequence_from_phi(phi, y, 20)));
    }

    // Functions that violate the equation are rejected.
    PowerSum bad(1);
    bad.add_term({Rational(2)}, 1);
    CHECK_FALSE(satisfies_reciprocal_equation(bad));
    PowerSum lopsided(2);
    lopsided.add_term({Rational(1, 3), Rational(2, 3)}, 1);
    const auto r = check_symmetric_homogeneous(lopsided);
    CHECK(r.normalized);
    CHECK_FALSE(r.symmetric);
    CHECK(r.homogeneous);
}
