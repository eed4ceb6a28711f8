#include "eigenseq/catalog.hpp"

#include <algorithm>
#include <stdexcept>

#include "eigenseq/eigen.hpp"
#include "eigenseq/worpitzky.hpp"

namespace eigenseq {

namespace {

Sequence catalan(std::size_t n) {
    std::vector<Rational> t(n);
    Rational c(1);
    for (std::size_t i = 0; i < n; ++i) {
        t[i] = c;
        c = c * Rational(static_cast<long>(2 * (2 * i + 1))) / Rational(static_cast<long>(i + 2));
    }
    return Sequence(std::move(t), "catalan");
}

// (n+2) M_n = (2n+1) M_{n-1} + 3(n-1) M_{n-2}
Sequence motzkin(std::size_t n) {
    std::vector<Rational> t(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i < 2) {
            t[i] = 1;
            continue;
        }
        const long k = static_cast<long>(i);
        t[i] = (Rational(2 * k + 1) * t[i - 1] + Rational(3 * (k - 1)) * t[i - 2]) / Rational(k + 2);
    }
    return Sequence(std::move(t), "motzkin");
}

Sequence two_term(std::size_t n, long first, long second, std::string name) {
    std::vector<Rational> t(n);
    Rational a(first), b(second);
    for (std::size_t i = 0; i < n; ++i) {
        t[i] = a;
        Rational next = a + b;
        a = b;
        b = next;
    }
    return Sequence(std::move(t), std::move(name));
}

Sequence central_binomial(std::size_t n) {
    std::vector<Rational> t(n);
    for (std::size_t i = 0; i < n; ++i) {
        t[i] = binomial(2 * i, i);
    }
    return Sequence(std::move(t), "central_binomial");
}

Sequence central_delannoy(std::size_t n) {
    std::vector<Rational> t(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k <= i; ++k) {
            t[i] += binomial(i, k) * binomial(i + k, k);
        }
    }
    return Sequence(std::move(t), "central_delannoy");
}

// Binomial transform of aerated Fibonacci; OGF t^2 (1-t) / (1 - 4t + 5t^2 - 2t^3 - t^4).
Sequence a101890(std::size_t n) {
    std::vector<Rational> t(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational v = i == 2 ? Rational(1) : (i == 3 ? Rational(-1) : Rational(0));
        const Rational rec[] = {Rational(4), Rational(-5), Rational(2), Rational(1)};
        for (std::size_t j = 1; j <= 4 && j <= i; ++j) {
            v += rec[j - 1] * t[i - j];
        }
        t[i] = v;
    }
    return Sequence(std::move(t), "a101890");
}

// EGF e^t / cosh t = 1 + tanh t; cosh is the even part of e^t.
Sequence a155585(std::size_t n) {
    if (n == 0) {
        return Sequence({}, "a155585");
    }
    const auto e = exp_series(Rational(1), n);
    std::vector<Rational> even(n);
    for (std::size_t i = 0; i < n; i += 2) {
        even[i] = e[i];
    }
    auto s = egf_to_sequence(ps_div(e, TruncatedSeries(std::move(even), SeriesKind::EGF)));
    s.name = "a155585";
    return s;
}

Sequence ones(std::size_t n) { return Sequence(std::vector<Rational>(n, Rational(1)), "ones"); }

Sequence unit(std::size_t n) {
    std::vector<Rational> t(n);
    if (n > 0) {
        t[0] = 1;
    }
    return Sequence(std::move(t), "zeros_then_one");
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> c;
    c.push_back({"catalan", "A000108", catalan, {"1", "1", "2", "5", "14", "42", "132", "429", "1430", "4862"}});
    c.push_back({"motzkin", "A001006", motzkin,
                 {"1", "1", "2", "4", "9", "21", "51", "127", "323", "835", "2188", "5798", "15511", "41835"}});
    c.push_back({"fibonacci", "A000045", [](std::size_t n) { return two_term(n, 0, 1, "fibonacci"); },
                 {"0", "1", "1", "2", "3", "5", "8", "13", "21", "34", "55"}});
    c.push_back({"lucas", "A000032", [](std::size_t n) { return two_term(n, 2, 1, "lucas"); },
                 {"2", "1", "3", "4", "7", "11", "18", "29", "47", "76"}});
    c.push_back({"lucas_half", "",
                 [](std::size_t n) {
                     auto s = lucas_half_fixed(n);
                     s.name = "lucas_half";
                     return s;
                 },
                 {"1", "1/2", "3/2", "2", "7/2", "11/2", "9", "29/2"}});
    c.push_back({"central_binomial", "A000984", central_binomial, {"1", "2", "6", "20", "70", "252", "924", "3432"}});
    c.push_back({"central_delannoy", "A001850", central_delannoy,
                 {"1", "3", "13", "63", "321", "1683", "8989", "48639", "265729"}});
    c.push_back({"a101890", "A101890", a101890,
                 {"0", "0", "1", "3", "7", "15", "32", "70", "157", "357", "815", "1859", "4232", "9620", "21853",
                  "49635", "112747", "256139", "581944", "1322210", "3004145", "6825557", "15507867", "35234183"}});
    c.push_back({"a155585", "A155585", a155585,
                 {"1", "1", "0", "-2", "0", "16", "0", "-272", "0", "7936", "0", "-353792", "0", "22368256", "0",
                  "-1903757312", "0", "209865342976", "0", "-29088885112832"}});
    c.push_back({"ones", "", ones, {"1", "1", "1", "1"}});
    c.push_back({"zeros_then_one", "", unit, {"1", "0", "0", "0"}});
    return c;
}

constexpr std::string_view aerated_suffix = "_aerated";

} // namespace

const std::vector<CatalogEntry> &catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const auto &e : catalog()) {
        names.push_back(e.name);
    }
    return names;
}

Sequence get_sequence(std::string_view name, std::size_t n) {
    if (name.size() > aerated_suffix.size() && name.ends_with(aerated_suffix)) {
        const auto base = name.substr(0, name.size() - aerated_suffix.size());
        auto s = aerate(get_sequence(base, (n + 1) / 2), n);
        s.name = std::string(name);
        return s;
    }
    for (const auto &e : catalog()) {
        if (e.name == name || (!e.oeis_id.empty() && e.oeis_id == name)) {
            return e.generator(n);
        }
    }
    std::string msg = "unknown catalog name \"" + std::string(name) + "\"";
    if (name == "a115865" || name == "A115865") {
        msg += " (no verified term snapshot for the Legendre-family parameters of A115865; "
               "use legendre_family(k, m, n) directly)";
    }
    msg += "; available:";
    for (const auto &e : catalog()) {
        msg += " " + e.name;
    }
    msg += " (any name may take the suffix _aerated)";
    throw std::out_of_range(msg);
}

bool matches_snapshot(const CatalogEntry &entry) {
    const auto s = entry.generator(entry.snapshot.size());
    if (s.size() != entry.snapshot.size()) {
        return false;
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!(s[i] == Rational::parse(entry.snapshot[i]))) {
            return false;
        }
    }
    return true;
}

Sequence aerate(const Sequence &a) { return aerate(a, 2 * a.size()); }

Sequence aerate(const Sequence &a, std::size_t n) {
    if ((n + 1) / 2 > a.size()) {
        throw std::invalid_argument("aerate: need " + std::to_string((n + 1) / 2) + " base terms for " +
                                    std::to_string(n) + " aerated terms");
    }
    std::vector<Rational> t(n);
    for (std::size_t i = 0; i < n; i += 2) {
        t[i] = a[i / 2];
    }
    return Sequence(std::move(t), a.name.empty() ? std::string{} : a.name + "_aerated");
}

Sequence bessel_even_egf(const Rational &p, const Rational &q_squared, unsigned nu, std::size_t n) {
    if (n == 0) {
        return Sequence{};
    }
    const Rational quarter = q_squared / Rational(4);
    std::vector<Rational> even(n);
    Rational qpow(1);
    for (std::size_t m = 0; 2 * m < n; ++m) {
        even[2 * m] = qpow / (factorial(m) * factorial(m + nu));
        qpow *= quarter;
    }
    const auto egf = ps_mul(exp_series(p, n), TruncatedSeries(std::move(even), SeriesKind::EGF));
    return egf_to_sequence(egf);
}

Rational legendre_eval(std::size_t n, const Rational &m) {
    // (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}
    Polynomial prev({Rational(1)});
    Polynomial cur({Rational(0), Rational(1)});
    if (n == 0) {
        cur = prev;
    }
    for (std::size_t k = 1; k < n; ++k) {
        const long kk = static_cast<long>(k);
        std::vector<Rational> xp(cur.coeffs().size() + 1);
        for (std::size_t i = 0; i < cur.coeffs().size(); ++i) {
            xp[i + 1] = cur.coeffs()[i];
        }
        Polynomial next = Rational(2 * kk + 1, kk + 1) * Polynomial(std::move(xp)) + Rational(-kk, kk + 1) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    // Only powers i with i = n (mod 2) occur, so sqrt(m)^(i+n) = m^((i+n)/2).
    Rational acc;
    for (std::size_t i = 0; i < cur.coeffs().size(); ++i) {
        if (!cur.coeffs()[i].is_zero()) {
            acc += cur.coeffs()[i] * pow(m, (i + n) / 2);
        }
    }
    return acc;
}

Sequence legendre_family(const Rational &k, const Rational &m, std::size_t n) {
    std::vector<Rational> t(n);
    Rational kp(1);
    for (std::size_t i = 0; i < n; ++i) {
        t[i] = legendre_eval(i, m) * kp;
        kp *= k;
    }
    return Sequence(std::move(t));
}

} // namespace eigenseq
