#pragma once

#include <random>

#include <catch2/catch_amalgamated.hpp>

#include <cozeta/series.hpp>

namespace cozeta::testing {

inline VariableSpec sym() { return VariableSpec::symbolic_q(); }

// series c * q^e T^d in symbolic mode
inline TruncatedSeries qT(long d, long e, const Rat &c, long t_cap = kInf) {
    return series_monomial(sym(), MonomialKey{d, Exp{e}}, c, t_cap);
}

// 1 with the given T-cap
inline TruncatedSeries one(long t_cap = kInf) { return series_one(sym(), t_cap); }

inline Rat coeff(const TruncatedSeries &s, long d, long e) {
    LaurentSlice sl = s.slice_at(d);
    Exp key{e};
    if (!sl.box.contains(key)) throw precision_error("coefficient outside window");
    auto it = sl.terms.find(key);
    return it == sl.terms.end() ? Rat(0) : it->second;
}

// numeric-mode coefficient
inline Rat ncoeff(const TruncatedSeries &s, long d) {
    LaurentSlice sl = s.slice_at(d);
    return sl.is_zero() ? Rat(0) : sl.terms.begin()->second;
}

// random symbolic series with unit constant term, for round-trip properties
inline TruncatedSeries random_unit_series(std::mt19937 &rng, long t_cap, long max_qexp = 4) {
    std::uniform_int_distribution<long> nterms(0, 2), qe(-max_qexp, max_qexp), num(-5, 5);
    TruncatedSeries s = series_one(sym(), t_cap);
    for (long d = 1; d <= t_cap; ++d) {
        LaurentSlice sl = LaurentSlice::zero(1);
        for (long k = nterms(rng); k > 0; --k) sl.terms[Exp{qe(rng)}] += Rat(num(rng));
        sl.normalize();
        s.set_slice(d, sl);
    }
    return s;
}

} // namespace cozeta::testing
