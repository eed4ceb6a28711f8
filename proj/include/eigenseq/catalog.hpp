#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "eigenseq/rational.hpp"
#include "eigenseq/series.hpp"

namespace eigenseq {

struct CatalogEntry {
    std::string name;
    std::string oeis_id; // empty when not applicable
    std::function<Sequence(std::size_t)> generator;
    std::vector<std::string_view> snapshot; // leading terms, checked against the generator
};

const std::vector<CatalogEntry> &catalog();

std::vector<std::string> catalog_names();

// First n terms of a named entry. Names are matched exactly or by OEIS id (e.g. "A000108");
// a "_aerated" suffix aerates the base entry. Unknown names throw std::out_of_range.
Sequence get_sequence(std::string_view name, std::size_t n);

// True iff the entry's generator reproduces its snapshot.
bool matches_snapshot(const CatalogEntry &entry);

// (a_0, 0, a_1, 0, a_2, ...), truncated to n terms (default 2 * a.size()).
Sequence aerate(const Sequence &a);
Sequence aerate(const Sequence &a, std::size_t n);

// Sequence with EGF e^{pt} * sum_m (q^2/4)^m t^(2m) / (m! (m+nu)!), i.e. e^{pt} I_nu(qt) (qt/2)^(-nu).
// The Bessel factor is even, so the result is fixed by L^(-1, 2p).
Sequence bessel_even_egf(const Rational &p, const Rational &q_squared, unsigned nu, std::size_t n);

// P_n(sqrt(m)) * sqrt(m)^n, rational because P_n has the parity of n.
Rational legendre_eval(std::size_t n, const Rational &m);

// (P_n(sqrt m) (k sqrt m)^n): EGF e^{kmt} I_0(k sqrt(m(m-1)) t), fixed by L^(-1, 2km).
Sequence legendre_family(const Rational &k, const Rational &m, std::size_t n);

} // namespace eigenseq
