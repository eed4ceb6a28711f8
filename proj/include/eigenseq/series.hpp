#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "eigenseq/rational.hpp"

namespace eigenseq {

// Finite prefix of an infinite sequence. Terms are exact; nothing is zero-extended.
struct Sequence {
    std::vector<Rational> terms;
    std::string name;

    Sequence() = default;
    explicit Sequence(std::vector<Rational> t, std::string n = {}) : terms(std::move(t)), name(std::move(n)) {}

    std::size_t size() const { return terms.size(); }
    const Rational &operator[](std::size_t i) const { return terms[i]; }
    Rational &operator[](std::size_t i) { return terms[i]; }

    // Equality compares terms only; the label is metadata.
    friend bool operator==(const Sequence &a, const Sequence &b) { return a.terms == b.terms; }
};

// Builds a sequence from integer literals, mostly for tests and snapshots.
Sequence make_sequence(std::initializer_list<long> values, std::string name = {});

enum class SeriesKind { OGF, EGF };

// Formal power series truncated mod t^N. An EGF stores a_n / n! at index n,
// so that the Cauchy product realizes the binomial convolution.
class TruncatedSeries {
public:
    TruncatedSeries(std::vector<Rational> coeffs, SeriesKind kind);

    static TruncatedSeries zero(std::size_t order, SeriesKind kind);
    static TruncatedSeries one(std::size_t order, SeriesKind kind);
    // The series t (requires order >= 2 to be nonzero).
    static TruncatedSeries identity(std::size_t order, SeriesKind kind);

    std::size_t order() const { return coeffs_.size(); }
    SeriesKind kind() const { return kind_; }
    std::span<const Rational> coeffs() const { return coeffs_; }
    const Rational &operator[](std::size_t i) const { return coeffs_[i]; }

    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

private:
    std::vector<Rational> coeffs_;
    SeriesKind kind_;
};

TruncatedSeries ps_add(const TruncatedSeries &f, const TruncatedSeries &g);
TruncatedSeries ps_sub(const TruncatedSeries &f, const TruncatedSeries &g);
TruncatedSeries ps_scale(const TruncatedSeries &f, const Rational &c);
TruncatedSeries ps_mul(const TruncatedSeries &f, const TruncatedSeries &g);
TruncatedSeries ps_div(const TruncatedSeries &f, const TruncatedSeries &g);
// Formal derivative; the top coefficient is lost so the order is kept by padding with zero.
TruncatedSeries ps_derivative(const TruncatedSeries &f);

// f(g(t)) by Horner's scheme. Requires g(0) = 0 and equal orders; the result has f's kind.
TruncatedSeries ps_compose(const TruncatedSeries &f, const TruncatedSeries &g);

// Compositional inverse g with f(g(u)) = u, by Newton iteration.
// Requires f(0) = 0 and f'(0) != 0.
TruncatedSeries ps_reversion(const TruncatedSeries &f);

// e^{yt} as an EGF: coefficients y^n / n!.
TruncatedSeries exp_series(const Rational &y, std::size_t order);

TruncatedSeries sequence_to_egf(const Sequence &a);
Sequence egf_to_sequence(const TruncatedSeries &f);
TruncatedSeries sequence_to_ogf(const Sequence &a);
Sequence ogf_to_sequence(const TruncatedSeries &f);

} // namespace eigenseq
