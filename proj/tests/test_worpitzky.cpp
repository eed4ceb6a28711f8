#include <doctest.h>

#include "eigenseq/catalog.hpp"
#include "eigenseq/eigen.hpp"
#include "eigenseq/worpitzky.hpp"
#include "oracles.hpp"

using namespace eigenseq;

namespace {

// Applies L^(1,y) to a polynomial sequence coefficient by coefficient (the operator is linear).
PolySequence binomial_on_polys(const PolySequence &ps, const Rational &y) {
    const std::size_t n = ps.size();
    std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
    for (std::size_t d = 0; d < n; ++d) {
        std::vector<Rational> column(n);
        for (std::size_t i = 0; i < n; ++i) {
            column[i] = ps.polys[i].coeff(d);
        }
        const auto image = gen_binomial(Sequence(column), 1, y);
        for (std::size_t i = 0; i < n; ++i) {
            out[i][d] = image[i];
        }
    }
    PolySequence r;
    for (auto &c : out) {
        r.polys.emplace_back(std::move(c));
    }
    return r;
}

} // namespace

TEST_CASE("Polynomial basics") {
    const Polynomial p({1, 2, 0, 0});
    CHECK(p.degree() == 1);
    CHECK(Polynomial({0, 0}).degree() == -1);
    CHECK(p(Rational(3)) == Rational(7));
    // (1 + 2x) at x + 1 is 3 + 2x
    CHECK(p.shifted(1) == Polynomial({3, 2}));
    const Polynomial q({Rational(1, 2), 0, -1});
    CHECK(q.shifted(2).shifted(-2) == q);
    CHECK((p + q) == Polynomial({Rational(3, 2), 2, -1}));
    CHECK((Rational(2) * q) == Polynomial({1, 0, -2}));
}

TEST_CASE("worpitzky weights") {
    for (std::size_t n = 0; n <= 12; ++n) {
        // Brute-force diagonal: (-1)^n n!
        const Rational expected = (n % 2 == 0 ? Rational(1) : Rational(-1)) * factorial(n);
        CHECK(worpitzky_weight(n, n) == expected);
        for (std::size_t k = n + 1; k <= n + 3; ++k) {
            CHECK(worpitzky_weight(n, k).is_zero());
        }
    }
}

TEST_CASE("worpitzky transform") {
    const auto unit = worpitzky(make_sequence({1, 0, 0, 0, 0, 0}));
    for (std::size_t n = 0; n < unit.size(); ++n) {
        // (x+1)^n
        std::vector<Rational> c(n + 1);
        for (std::size_t d = 0; d <= n; ++d) {
            c[d] = binomial(n, d);
        }
        CHECK(unit.polys[n] == Polynomial(c));
    }

    oracle::Generator gen(12);
    for (int trial = 0; trial < 10; ++trial) {
        const auto s = gen.sequence(12);
        const auto ps = worpitzky(s);
        for (std::size_t n = 0; n < ps.size(); ++n) {
            CHECK(ps.polys[n].degree() <= static_cast<long>(n));
            for (const auto &x : {Rational(0), Rational(1), Rational(-3, 2), Rational(5, 7)}) {
                CHECK(ps.polys[n](x) == oracle::literal_worpitzky_at(s, n, x));
            }
        }
    }
}

TEST_CASE("worpify of aerated Catalan") {
    const auto b = get_sequence("catalan_aerated", 16);
    const auto a = worpify(b);
    // Leading terms from a direct triangular solve.
    CHECK(a[0] == Rational(1));
    CHECK(a[1] == Rational(1));
    CHECK(a[2] == Rational(3, 2));
    CHECK(a[3] == Rational(2));
    CHECK(a[4] == Rational(61, 24));
    CHECK(a[6] == Rational(2699, 720));

    const auto W = worpitzky(a);
    CHECK(poly_eval_sequence(W, 0) == b);
    CHECK(poly_eval_sequence(W, 1) == get_sequence("motzkin", 16));

    // At 2 the values are the Catalan numbers one index ahead: C_{n+1}.
    const auto at_two = poly_eval_sequence(W, 2);
    const auto catalan = get_sequence("catalan", 17);
    for (std::size_t n = 0; n < 16; ++n) {
        CHECK(at_two[n] == catalan[n + 1]);
    }
    CHECK_FALSE(at_two == get_sequence("catalan", 16));

    // a(y) is fixed by L^(-1, 2y).
    for (const auto &y : {Rational(1), Rational(2), Rational(-1, 3)}) {
        CHECK(is_fixed(OperatorChain{GenBinomial{-1, 2 * y}}, poly_eval_sequence(W, y)));
    }
}

TEST_CASE("worpify round trips") {
    const auto unit = make_sequence({1, 0, 0, 0, 0, 0, 0});
    CHECK(poly_eval_sequence(worpitzky(worpify(unit)), 0) == unit);

    oracle::Generator gen(2718);
    for (int trial = 0; trial < 50; ++trial) {
        const auto b = gen.sequence(12);
        CHECK(poly_eval_sequence(worpitzky(worpify(b)), 0) == b);
    }
}

TEST_CASE("Appell property") {
    oracle::Generator gen(99);
    for (int trial = 0; trial < 20; ++trial) {
        const auto ps = worpitzky(gen.sequence(10));
        const auto y = gen.rational();
        CHECK(binomial_on_polys(ps, y) == appell_shift(ps, y));

        const auto y2 = gen.rational();
        CHECK(appell_shift(appell_shift(ps, y), y2) == appell_shift(ps, y + y2));
        CHECK(appell_shift(ps, 0) == ps);
    }
}
