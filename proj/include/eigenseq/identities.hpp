#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "eigenseq/rational.hpp"
#include "eigenseq/series.hpp"

namespace eigenseq {

struct IdentityFailure {
    std::size_t n;
    Rational lhs;
    Rational rhs;
};

struct IdentityReport {
    std::string name;
    std::size_t max_n_checked = 0; // largest index that was evaluated
    bool holds = true;
    std::optional<IdentityFailure> first_failure;
};

// sum_{i<=n} sum_{k<=i/2} C(n,i) C(i,2k) (-1)^i 2^(n-i) y^(n-2k) h^(2k) b_{2k} = a_n for 1 <= n < N,
// relating an even b to a = L^(h,y)(b). Requires b and a to have at least N terms.
IdentityReport check_ff(const Sequence &b, const Sequence &a, const Rational &h, const Rational &y, std::size_t N);

// sum_{k<=i/2} C(i,2k) C_k = M_i for 0 <= i < N.
IdentityReport check_catalan_motzkin(std::size_t N);

// sum_{i<=n} C(n,i) (-1)^i 2^(n-i) a_i = a_n for 0 <= n < N.
IdentityReport check_self_binomial(const Sequence &a, std::size_t N);

std::string describe(const IdentityReport &report);

} // namespace eigenseq
