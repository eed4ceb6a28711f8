#include <doctest.h>

#include "eigenseq/catalog.hpp"
#include "eigenseq/eigen.hpp"
#include "eigenseq/identities.hpp"
#include "oracles.hpp"

using namespace eigenseq;

TEST_CASE("check_ff") {
    const auto r = check_ff(get_sequence("catalan_aerated", 24), get_sequence("motzkin", 24), 1, 1, 24);
    CHECK(r.holds);
    CHECK(r.max_n_checked == 23);
    CHECK_FALSE(r.first_failure.has_value());

    const auto unit = make_sequence({1, 0, 0, 0, 0, 0, 0, 0});
    CHECK(check_ff(unit, gen_binomial(unit, 1, 1), 1, 1, 8).holds);
    CHECK(gen_binomial(unit, 1, 1) == make_sequence({1, 1, 1, 1, 1, 1, 1, 1}));

    CHECK(check_ff(get_sequence("fibonacci_aerated", 24), get_sequence("a101890", 24), 1, 1, 24).holds);

    const auto wrong = check_ff(get_sequence("catalan_aerated", 10), get_sequence("catalan", 10), 1, 1, 10);
    CHECK_FALSE(wrong.holds);
    REQUIRE(wrong.first_failure.has_value());
    // M_n and C_n first differ at n = 3 (4 vs 5).
    CHECK(wrong.first_failure->n == 3);
}

TEST_CASE("check_ff on random even seeds implies the self-binomial identity") {
    oracle::Generator gen(88);
    for (int trial = 0; trial < 20; ++trial) {
        const auto b = gen.even_sequence(16, false);
        const auto h = gen.rational();
        const auto y = gen.rational();
        CHECK(check_ff(b, gen_binomial(b, h, y), h, y, 16).holds);
        const auto a = gen_binomial(b, 1, 1);
        REQUIRE(check_ff(b, a, 1, 1, 16).holds);
        CHECK(check_self_binomial(a, 16).holds);
    }
}

TEST_CASE("check_catalan_motzkin") {
    const auto r = check_catalan_motzkin(32);
    CHECK(r.holds);
    CHECK(r.max_n_checked == 31);
    // i = 4: 1 + 6 + 2 = 9
    CHECK(binomial(4, 0) * 1 + binomial(4, 2) * 1 + binomial(4, 4) * 2 == get_sequence("motzkin", 5)[4]);
}

TEST_CASE("check_self_binomial") {
    CHECK(check_self_binomial(get_sequence("motzkin", 32), 32).holds);
    CHECK(check_self_binomial(get_sequence("a101890", 32), 32).holds);
    const auto r = check_self_binomial(get_sequence("catalan", 32), 32);
    CHECK_FALSE(r.holds);
    REQUIRE(r.first_failure.has_value());
    // n = 3: 8 - 12 + 12 - 5 = 3, but C_3 = 5
    CHECK(r.first_failure->n == 3);
    CHECK(r.first_failure->lhs == Rational(3));
    CHECK(r.first_failure->rhs == Rational(5));
    CHECK(describe(r) == "self-binomial: FAILS at n = 3 (lhs 3, rhs 5)");
}

TEST_CASE("self-binomial agrees with is_fixed under L^(-1,2)") {
    oracle::Generator gen(123);
    const OperatorChain chain{GenBinomial{-1, 2}};
    for (int trial = 0; trial < 100; ++trial) {
        // Half of the samples are fixed by construction.
        const auto a = trial % 2 == 0 ? fixed_from_even(gen.even_sequence(14), 1, 1) : gen.sequence(14);
        CHECK(check_self_binomial(a, 14).holds == is_fixed(chain, a).fixed);
    }
}
