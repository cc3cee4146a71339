#pragma once

// Plethystic Log and its inverse: the exponents v_{d,m} of
// Z = prod_{d,m} (1 - t^m T^d)^{-v_{d,m}}, extracted by two independent
// routes (Moebius/Adams on log Z, and the divisor recursion) and
// cross-checked.

#include "series.hpp"

namespace cozeta {

struct PlethFactorization {
    // exponent table as a series: slice_at(d) holds sum_m v_{d,m} t^m, with
    // its precision window; the T^0 slice is always zero.
    TruncatedSeries table;

    long d_cap() const { return table.t_cap; }

    bool integral() const {
        for (const auto &[d, s] : table.coeffs)
            for (const auto &[e, c] : s.terms)
                if (!is_integer(c)) return false;
        return true;
    }

    Rat value(long d, const Exp &m) const {
        LaurentSlice s = table.slice_at(d);
        if (!s.box.contains(m)) throw precision_error("v_{d,m} outside the computed window");
        auto it = s.terms.find(m);
        return it == s.terms.end() ? Rat(0) : it->second;
    }
};

inline PlethFactorization pleth_log(const TruncatedSeries &z, std::optional<long> t_cap = {}) {
    TruncatedSeries logz = log(z, t_cap);
    const long cap = logz.t_cap;
    const std::size_t n = z.nvars();

    // Route 1: V = sum_k mu(k)/k * adams(log z, k)
    TruncatedSeries route1 = series_zero(z.vars, cap);
    for (long k = 1; k <= cap; ++k) {
        long mu = mobius(k);
        if (mu == 0) continue;
        TruncatedSeries t = adams(logz, k);
        t.t_cap = std::min(t.t_cap, cap);
        t.normalize();
        route1 = add(route1, scale(t, Rat(mu, k)));
    }

    // Route 2: v_{D,M} = L_{D,M} - sum_{k>=2, k|D, k|M} v_{D/k,M/k}/k
    TruncatedSeries route2 = series_zero(z.vars, cap);
    for (long D = 1; D <= cap; ++D) {
        LaurentSlice L = logz.slice_at(D);
        std::map<Exp, Rat> cand;
        for (const auto &[e, c] : L.terms) cand[e] = c;
        for (long k = 2; k <= D; ++k) {
            if (D % k) continue;
            auto it = route2.coeffs.find(D / k);
            if (it == route2.coeffs.end()) continue;
            for (const auto &[e, c] : it->second.terms) {
                Exp scaled = e;
                for (auto &x : scaled) x *= k;
                cand.try_emplace(scaled, 0);
            }
        }
        LaurentSlice out = LaurentSlice::zero(n);
        out.box = L.box;
        for (auto &[M, val] : cand) {
            for (long k = 2; k <= D; ++k) {
                if (D % k) continue;
                bool div = true;
                Exp down(n);
                for (std::size_t i = 0; i < n; ++i) {
                    if (M[i] % k) { div = false; break; }
                    down[i] = M[i] / k;
                }
                if (!div) continue;
                auto it = route2.coeffs.find(D / k);
                if (it == route2.coeffs.end()) continue;
                auto jt = it->second.terms.find(down);
                if (jt != it->second.terms.end()) val -= jt->second / k;
            }
            if (val != 0) out.terms[M] = val;
        }
        out.normalize();
        route2.set_slice(D, std::move(out));
    }

    if (!series_equal_on_common(route1, route2))
        throw std::logic_error("pleth_log: Moebius/Adams and recursive routes disagree");
    return PlethFactorization{std::move(route1)};
}

// Most negative Laurent exponent (per variable) reachable by products of
// stored factors of total T-degree E; used to clamp windows of truncated
// infinite products.
inline std::vector<Exp> tail_floor_table(const PlethFactorization &f, long t_cap) {
    const std::size_t n = f.table.nvars();
    std::vector<Exp> nu(static_cast<std::size_t>(t_cap) + 1, Exp(n, 0));
    for (long E = 1; E <= t_cap; ++E) {
        for (std::size_t i = 0; i < n; ++i) {
            long best = 0;
            for (const auto &[d, s] : f.table.coeffs) {
                if (d > E) break;
                long fl = s.box.floor[i];
                if (fl >= kInf) continue;
                best = std::min(best, sat_add(fl, nu[E - d][i]));
            }
            nu[E][i] = best;
        }
    }
    return nu;
}

inline void clamp_to_factorization_window(TruncatedSeries &s, const PlethFactorization &f) {
    const std::size_t n = s.nvars();
    if (n == 0) return;
    long t_cap = std::min(s.t_cap, f.d_cap());
    s.t_cap = t_cap;
    s.normalize();
    auto nu = tail_floor_table(f, t_cap);
    for (std::size_t i = 0; i < n; ++i) {
        clamp_q_cap(s, i, kInf, [&](long D) {
            long lim = kInf;
            for (const auto &[d, sl] : f.table.coeffs) {
                if (d > D) break;
                if (sl.box.cap[i] >= kInf) continue;
                lim = std::min(lim, sat_add(sl.box.cap[i], nu[D - d][i]));
            }
            return lim;
        });
    }
}

// prod (1 - t^m T^d)^{-v_{d,m}} truncated; inverse of pleth_log on windows.
inline TruncatedSeries pleth_product(const PlethFactorization &f, long t_cap) {
    const VariableSpec &vars = f.table.vars;
    long cap = std::min(t_cap, f.d_cap());
    TruncatedSeries acc = series_one(vars, cap);
    for (const auto &[d, s] : f.table.coeffs) {
        if (d > cap) break;
        for (const auto &[m, v] : s.terms) {
            TruncatedSeries factor = series_one(vars, cap);
            factor.set_slice(d, LaurentSlice::monomial(vars.nvars(), m, -1));
            acc = mul(acc, pow_series(factor, LaurentSlice::constant(vars.nvars(), -v), cap));
        }
    }
    clamp_to_factorization_window(acc, f);
    return acc;
}

} // namespace cozeta
