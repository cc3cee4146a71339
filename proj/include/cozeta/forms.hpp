#pragma once

// The coloring zeta function Z_C(X,t,T) and its four equivalent
// computations, plus a direct combinatorial enumerator over coloring types
// that is independent of all four product formulas.

#include "pleth.hpp"
#include "setups.hpp"
#include "variety.hpp"

namespace cozeta {

// Z_C(point, t^d, T^d) = sum_lambda W(lambda)(t^d) T^{d|lambda|}
inline TruncatedSeries point_zeta_scaled(const ColoringSetup &setup, long d,
                                         const VariableSpec &vars, const EngineCaps &caps) {
    if (d < 1) throw std::invalid_argument("point_zeta_scaled: d must be >= 1");
    if (caps.t_cap < 0 || caps.t_cap >= kInf)
        throw std::invalid_argument("point_zeta: need a finite T-cap");
    TruncatedSeries z(vars, caps.t_cap);
    z.set_slice(0, LaurentSlice::constant(vars.nvars(), 1));
    for (long k = 1; k * d <= caps.t_cap; ++k) {
        LaurentSlice acc = LaurentSlice::zero(vars.nvars());
        for (const Partition &lam : setup.colors(k))
            acc = slice_add(acc, setup.weight(lam, d, vars, caps));
        z.set_slice(k * d, slice_add(z.slice_at(k * d), acc));
    }
    return z;
}

inline TruncatedSeries point_zeta(const ColoringSetup &setup, const VariableSpec &vars,
                                  const EngineCaps &caps) {
    return point_zeta_scaled(setup, 1, vars, caps);
}

// First form: Z_C(X) = prod_d Z_C(point, t^d, T^d)^{Ntilde_d}
inline TruncatedSeries first_form(const ColoringSetup &setup, const VarietySpec &variety,
                                  const VariableSpec &vars, const EngineCaps &caps) {
    auto profile = orbit_profile(variety, vars, caps.t_cap);
    TruncatedSeries acc = series_one(vars, caps.t_cap);
    for (long d = 1; d <= caps.t_cap; ++d) {
        const LaurentSlice &nd = profile.tilde[d - 1];
        if (nd.is_zero() && nd.exact()) continue;
        TruncatedSeries zd = point_zeta_scaled(setup, d, vars, caps);
        acc = mul(acc, pow_series(zd, nd, caps.t_cap));
    }
    return acc;
}

namespace detail {

inline PlethFactorization point_factorization(const ColoringSetup &setup, const VariableSpec &vars,
                                              const EngineCaps &caps) {
    if (vars.numeric() && setup.weight_uses_q)
        throw incompatible_error(
            "setup '" + setup.name +
            "' has a q-dependent weight: its plethystic factorization has infinitely many "
            "q-contributions per coefficient and only exists in symbolic mode");
    PlethFactorization f = pleth_log(point_zeta(setup, vars, caps));
    if (!f.integral())
        throw integrality_error("pleth_log(point_zeta): non-integral exponent v_{d,m}");
    return f;
}

// Numeric route for q-dependent weights: the factorization only exists in
// symbolic mode, so compute the form symbolically and specialize q.  Valid
// only where the product telescopes to finitely many q-terms per T-degree;
// certified against the first form, which is always finite and exact.
inline TruncatedSeries specialize_symbolic_form(
    const ColoringSetup &setup, const VarietySpec &variety, const VariableSpec &vars,
    const EngineCaps &caps,
    const std::function<TruncatedSeries(const VariableSpec &, const EngineCaps &)> &form);

} // namespace detail

// Second form: Z_C(X) = prod_{d,m} Z(X, t^m T^d)^{v_{d,m}}
inline TruncatedSeries second_form(const ColoringSetup &setup, const VarietySpec &variety,
                                   const VariableSpec &vars, const EngineCaps &caps) {
    if (vars.numeric() && setup.weight_uses_q)
        return detail::specialize_symbolic_form(
            setup, variety, vars, caps,
            [&](const VariableSpec &v, const EngineCaps &c) { return second_form(setup, variety, v, c); });
    PlethFactorization f = detail::point_factorization(setup, vars, caps);
    TruncatedSeries zx = zeta_series(variety, vars, caps.t_cap);
    TruncatedSeries acc = series_one(vars, caps.t_cap);
    for (const auto &[d, s] : f.table.coeffs) {
        if (d > caps.t_cap) break;
        for (const auto &[m, v] : s.terms) {
            long k = as_integer(v).convert_to<long>();
            TruncatedSeries factor = subst_T_monomial(zx, MonomialKey{d, m});
            factor.t_cap = std::min(factor.t_cap, caps.t_cap);
            factor.normalize();
            acc = mul(acc, pow_int(factor, k, {caps.t_cap, {}}));
        }
    }
    clamp_to_factorization_window(acc, f);
    return acc;
}

// Third form: Z_C(X) = prod_i Z_C(x_i)^{n_i} for Z(X,T) = prod (1-x_i T)^{-n_i},
// x_i = q^{j_i} monomial factors only.
inline TruncatedSeries third_form(const ColoringSetup &setup, const VarietySpec &variety,
                                  const VariableSpec &vars, const EngineCaps &caps) {
    if (vars.numeric() && setup.weight_uses_q)
        return detail::specialize_symbolic_form(
            setup, variety, vars, caps,
            [&](const VariableSpec &v, const EngineCaps &c) { return third_form(setup, variety, v, c); });
    PlethFactorization f = detail::point_factorization(setup, vars, caps);
    FactoredZeta fz = factored(variety);
    TruncatedSeries acc = series_one(vars, caps.t_cap);
    for (const auto &[j, nj] : fz.factors) {
        for (const auto &[d, s] : f.table.coeffs) {
            if (d > caps.t_cap) break;
            for (const auto &[m, v] : s.terms) {
                long k = as_integer(v).convert_to<long>() * nj;
                TruncatedSeries factor = series_one(vars, caps.t_cap);
                if (vars.numeric()) {
                    factor.set_slice(d, LaurentSlice::constant(0, -rat_pow(*vars.q_value, j)));
                } else {
                    Exp e = m;
                    e[0] += j; // u = q^j folded into the q exponent
                    factor.set_slice(d, LaurentSlice::monomial(vars.nvars(), e, -1));
                }
                acc = mul(acc, pow_int(factor, -k, {caps.t_cap, {}}));
            }
        }
    }
    clamp_to_factorization_window(acc, f);
    return acc;
}

namespace detail {

inline TruncatedSeries specialize_symbolic_form(
    const ColoringSetup &setup, const VarietySpec &variety, const VariableSpec &vars,
    const EngineCaps &caps,
    const std::function<TruncatedSeries(const VariableSpec &, const EngineCaps &)> &form) {
    EngineCaps scaps{caps.t_cap, std::max(caps.q_cap, 16 + 6 * caps.t_cap)};
    TruncatedSeries symbolic = form(VariableSpec::symbolic_q(), scaps);
    TruncatedSeries reference = first_form(setup, variety, vars, caps);
    const Rat q0 = *vars.q_value;
    TruncatedSeries out(vars, std::min({symbolic.t_cap, reference.t_cap, caps.t_cap}));
    for (long d = 0; d <= out.t_cap; ++d) {
        Rat val = 0;
        for (const auto &[e, c] : symbolic.slice_at(d).terms) val += c * rat_pow(q0, e[0]);
        LaurentSlice ref = reference.slice_at(d);
        Rat want = ref.is_zero() ? Rat(0) : ref.terms.begin()->second;
        if (val != want)
            throw incompatible_error(
                "setup '" + setup.name + "' on '" + variety.name +
                "': the product has infinitely many q-contributions at T^" + std::to_string(d) +
                " and does not specialize at numeric q; use symbolic mode");
        out.set_slice(d, LaurentSlice::constant(0, val));
    }
    return out;
}

} // namespace detail

struct FormCheckReport {
    CompareStatus status = CompareStatus::Equal;
    Mismatch first_mismatch;
    long t_cap = 0;
};

// Fourth form: Log(Z_C(X)) = N_X(q) * Log(Z_C(point)); symbolic q only.
inline FormCheckReport fourth_form_check(const ColoringSetup &setup, const VarietySpec &variety,
                                         const VariableSpec &vars, const EngineCaps &caps) {
    if (vars.numeric())
        throw incompatible_error("fourth_form_check multiplies Log by the polynomial N_X(q); "
                                 "it requires symbolic q-mode");
    PlethFactorization lhs = pleth_log(first_form(setup, variety, vars, caps));
    PlethFactorization fpt = pleth_log(point_zeta(setup, vars, caps));
    TruncatedSeries rhs =
        scale_slice(fpt.table, slice_from_qpoly(vars.nvars(), 0, variety.counting));
    CompareResult cmp = series_compare(lhs.table, rhs);
    return FormCheckReport{cmp.status, cmp.first_mismatch, caps.t_cap};
}

// The T^n coefficient of Z_C(X) by exhaustive enumeration of coloring types,
// weighted by binomial(Ntilde_d, m_d) * m_d!/prod m_{d,lambda}! — i.e. the
// falling factorial of Ntilde_d divided by the multiplicity factorials.
inline LaurentSlice direct_enum(const ColoringSetup &setup, const VarietySpec &variety,
                                const VariableSpec &vars, const EngineCaps &caps, long n,
                                long enum_guard = 8) {
    if (n < 0) throw std::invalid_argument("direct_enum: n must be >= 0");
    if (n > enum_guard)
        throw budget_error("direct_enum: degree " + std::to_string(n) +
                           " exceeds the enumeration guard " + std::to_string(enum_guard));
    const std::size_t nv = vars.nvars();
    if (n == 0) return LaurentSlice::constant(nv, 1);

    auto profile = orbit_profile(variety, vars, n);

    struct ColorEntry {
        long deg;       // d * |lambda|
        LaurentSlice w; // W(lambda)(t^d)
    };
    struct Group {
        long d;
        std::vector<ColorEntry> entries;
    };
    std::vector<Group> groups;
    for (long d = 1; d <= n; ++d) {
        Group g{d, {}};
        for (long k = 1; k * d <= n; ++k)
            for (const Partition &lam : setup.colors(k))
                g.entries.push_back({k * d, setup.weight(lam, d, vars, caps)});
        if (!g.entries.empty()) groups.push_back(std::move(g));
    }

    LaurentSlice total = LaurentSlice::zero(nv);
    // within a group: choose multiplicities per color, then weight by the
    // falling factorial Ntilde_d (Ntilde_d - 1) ... (Ntilde_d - m_d + 1)
    auto group_end = [&](std::size_t g, long rest, LaurentSlice acc, long m_d,
                         auto &&next_group) -> void {
        const LaurentSlice &nd = profile.tilde[groups[g].d - 1];
        for (long j = 0; j < m_d; ++j)
            acc = slice_mul(acc, slice_sub(nd, LaurentSlice::constant(nv, j)));
        if (acc.is_zero() && acc.exact()) return;
        next_group(g + 1, rest, std::move(acc));
    };
    auto in_group = [&](auto &&self, auto &&next_group, std::size_t g, std::size_t i, long rest,
                        LaurentSlice acc, long m_d) -> void {
        if (i == groups[g].entries.size()) {
            group_end(g, rest, std::move(acc), m_d, next_group);
            return;
        }
        const ColorEntry &ce = groups[g].entries[i];
        // multiplicity 0
        self(self, next_group, g, i + 1, rest, acc, m_d);
        LaurentSlice pw = acc;
        Rat fact = 1;
        for (long m = 1; ce.deg * m <= rest; ++m) {
            pw = slice_mul(pw, ce.w);
            fact *= m;
            self(self, next_group, g, i + 1, rest - ce.deg * m, slice_scale(pw, Rat(1) / fact),
                 m_d + m);
        }
    };
    auto over_groups = [&](auto &&self, std::size_t g, long rest, LaurentSlice acc) -> void {
        if (rest == 0) {
            total = slice_add(total, acc);
            return;
        }
        if (g == groups.size()) return;
        auto next = [&](std::size_t g2, long rest2, LaurentSlice acc2) {
            self(self, g2, rest2, std::move(acc2));
        };
        in_group(in_group, next, g, 0, rest, std::move(acc), 0);
    };
    over_groups(over_groups, 0, n, LaurentSlice::constant(nv, 1));
    return total;
}

} // namespace cozeta
