#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <variant>

#include "eigenseq/operators.hpp"
#include "eigenseq/rational.hpp"
#include "eigenseq/series.hpp"

namespace eigenseq {

struct FixedCheck {
    bool fixed = false;
    std::optional<std::size_t> first_mismatch;

    explicit operator bool() const { return fixed; }
};

// True iff apply_chain(chain, a) == a on every term; otherwise reports the smallest differing index.
FixedCheck is_fixed(const OperatorChain &chain, const Sequence &a);

// ((y/(1-h))^n): the unique sequence fixed by L^(h,y) when h is not +-1.
// For y = 0 this is (1, 0, 0, ...). Throws std::domain_error for h in {1, -1}.
Sequence generic_fixed(const Rational &h, const Rational &y, std::size_t n);

// gen_binomial(seed, h, y) for an even seed; the result is fixed by L^(-1, 2y).
// Throws std::invalid_argument if some odd-index term of the seed is nonzero.
Sequence fixed_from_even(const Sequence &seed, const Rational &h, const Rational &y);

// ((alpha^n + (1-alpha)^n) / 2), fixed by L^(-1,1).
Sequence phi_power_fixed(const Rational &alpha, std::size_t n);

// (L_n / 2) with Lucas numbers L_0 = 2, L_1 = 1; the golden-ratio member of the phi family.
Sequence lucas_half_fixed(std::size_t n);

// Multiplies the EGF of a by t^(2m) and truncates back to a.size() terms.
// Fixedness under any L^(-1,y) is preserved.
Sequence shift_fixed(const Sequence &a, std::size_t m);

// Fixed sequences of I^(x) o L^(h,y).
// x != 0, h not in {0, 1}: a_n = (-(x+y)/(h-1))^n.
// x != 0, h = 1, x + y = 0: a_n = c^n for the supplied c.
// Anything else throws std::domain_error (including h = 1 with x + y != 0: no fixed sequence exists).
Sequence il_fixed(const Rational &x, const Rational &y, const Rational &h, std::size_t n,
                  std::optional<Rational> c = std::nullopt);

// ((-y/2)^n), fixed by R o L^(1,y).
Sequence rev_l_fixed(const Rational &y, std::size_t n);
// ((-x/2)^n), fixed by R o I^(x).
Sequence rev_i_fixed(const Rational &x, std::size_t n);

// Named fixed-sequence families. Each knows how to generate its terms and which chain fixes it.
namespace family {

struct GenericLhy {
    Rational h, y;
};
struct EvenSeed {
    Rational h, y;
    Sequence seed;
};
struct PhiPower {
    Rational alpha;
};
struct LucasHalf {};
struct Shifted;
struct ILFixed {
    Rational x, y, h;
    std::optional<Rational> c;
};
struct RevLFixed {
    Rational y;
};
struct RevIFixed {
    Rational x;
};

} // namespace family

using FixedFamily = std::variant<family::GenericLhy, family::EvenSeed, family::PhiPower, family::LucasHalf,
                                 family::Shifted, family::ILFixed, family::RevLFixed, family::RevIFixed>;

namespace family {

// Shift by 2m positions of a family fixed by some L^(-1,y).
struct Shifted {
    std::shared_ptr<const FixedFamily> base;
    std::size_t m = 1;
};

} // namespace family

Sequence generate(const FixedFamily &fam, std::size_t n);
OperatorChain fixing_chain(const FixedFamily &fam);

} // namespace eigenseq
