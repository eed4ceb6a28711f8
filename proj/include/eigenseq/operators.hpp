#pragma once

#include <string>
#include <variant>
#include <vector>

#include "eigenseq/rational.hpp"
#include "eigenseq/series.hpp"

namespace eigenseq {

// Interpolated Invert I^(x): output OGF is A / (1 - x t A).
struct Invert {
    Rational x;
    friend bool operator==(const Invert &, const Invert &) = default;
};

// Generalized Binomial L^(h,y): b_n = sum_i C(n,i) h^i y^(n-i) a_i.
// The interpolated binomial L^(y) is the h = 1 case.
struct GenBinomial {
    Rational h;
    Rational y;
    friend bool operator==(const GenBinomial &, const GenBinomial &) = default;
};

// Revert: coefficients of the compositional inverse of sum a_n t^(n+1).
struct Revert {
    friend bool operator==(const Revert &, const Revert &) = default;
};

using OperatorSpec = std::variant<Invert, GenBinomial, Revert>;

// Applied right to left: {I, L} means I o L.
class OperatorChain {
public:
    explicit OperatorChain(std::vector<OperatorSpec> ops);
    OperatorChain(std::initializer_list<OperatorSpec> ops) : OperatorChain(std::vector<OperatorSpec>(ops)) {}

    const std::vector<OperatorSpec> &ops() const { return ops_; }

private:
    std::vector<OperatorSpec> ops_;
};

// Textual form used by the CLI: "L:h=<r>,y=<r>", "I:x=<r>", "R".
std::string to_string(const OperatorSpec &op);
std::string to_string(const OperatorChain &chain);

Sequence gen_binomial(const Sequence &a, const Rational &h, const Rational &y);

// Same result as gen_binomial, computed as (1/(ht)) A(ht / (1 - yt)) with A(t) = sum a_n t^(n+1).
// Throws std::domain_error for h = 0.
Sequence gen_binomial_ogf(const Sequence &a, const Rational &h, const Rational &y);

Sequence invert(const Sequence &a, const Rational &x);

// b_0 = 1/a_0; throws std::domain_error when a_0 = 0 or the sequence is empty.
Sequence revert(const Sequence &a);

Sequence apply(const OperatorSpec &op, const Sequence &a);
Sequence apply_chain(const OperatorChain &chain, const Sequence &a);

} // namespace eigenseq
