#pragma once

// Polynomial-count varieties, identified with their counting polynomial
// N_X in Z[q]: point counts N_r = N_X(q^r), Frobenius orbit profiles via
// Moebius inversion, zeta functions (two routes, cross-checked) and the
// factored form prod_j (1 - q^j T)^{-n_j}.

#include <string>
#include <vector>

#include "series.hpp"

namespace cozeta {

struct VarietySpec {
    std::string name;
    QPoly counting; // N_X, integer coefficients

    static VarietySpec point() { return {"point", {{0, 1}}}; }
    static VarietySpec ga() { return {"ga", {{1, 1}}}; }
    static VarietySpec gm() { return {"gm", {{1, 1}, {0, -1}}}; }

    static VarietySpec from_coeffs(const std::vector<Int> &c) {
        VarietySpec v;
        v.name = "poly";
        for (std::size_t j = 0; j < c.size(); ++j)
            if (c[j] != 0) v.counting[static_cast<long>(j)] = Rat(c[j]);
        return v;
    }

    // "point" | "ga" | "gm" | "poly:c0,c1,..."
    static VarietySpec parse(const std::string &s) {
        if (s == "point") return point();
        if (s == "ga") return ga();
        if (s == "gm") return gm();
        if (s.rfind("poly:", 0) == 0) {
            std::vector<Int> c;
            std::string rest = s.substr(5);
            std::size_t pos = 0;
            while (pos <= rest.size()) {
                std::size_t comma = rest.find(',', pos);
                std::string tok = rest.substr(pos, comma == std::string::npos ? comma : comma - pos);
                if (tok.empty()) throw std::invalid_argument("variety: empty coefficient");
                c.emplace_back(tok);
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            if (c.empty()) throw std::invalid_argument("variety: no coefficients");
            return from_coeffs(c);
        }
        throw std::invalid_argument("unknown variety spec: " + s);
    }

    void validate() const {
        for (const auto &[e, c] : counting) {
            if (e < 0) throw std::invalid_argument("counting polynomial must live in Z[q]");
            if (!is_integer(c)) throw std::invalid_argument("counting polynomial must be integral");
        }
    }
};

// N_r as a scalar slice in the ambient variables (polynomial in q, or an
// exact rational at specialized q).
inline LaurentSlice count_slice(const VarietySpec &spec, const VariableSpec &vars, long r) {
    QPoly nr = qpoly_subst_pow(spec.counting, r);
    if (vars.numeric()) return LaurentSlice::constant(0, qpoly_eval(spec.counting, rat_pow(*vars.q_value, r)));
    return slice_from_qpoly(vars.nvars(), 0, nr);
}

inline std::vector<LaurentSlice> counts(const VarietySpec &spec, const VariableSpec &vars, long r_max) {
    if (r_max < 1) throw std::invalid_argument("counts: r_max must be >= 1");
    std::vector<LaurentSlice> out;
    for (long r = 1; r <= r_max; ++r) out.push_back(count_slice(spec, vars, r));
    return out;
}

struct OrbitProfile {
    VariableSpec vars;
    std::vector<LaurentSlice> tilde; // tilde[d-1] = Ntilde_d, 1 <= d <= d_max

    long d_max() const { return static_cast<long>(tilde.size()); }
};

// Ntilde_d = (1/d) sum_{e|d} mu(e) N_{d/e}; in numeric mode each value must
// be an integer (a non-integer signals an invalid counting polynomial).
inline OrbitProfile orbit_profile(const VarietySpec &spec, const VariableSpec &vars, long d_max) {
    if (d_max < 1) throw std::invalid_argument("orbit_profile: d_max must be >= 1");
    OrbitProfile p{vars, {}};
    auto nr = counts(spec, vars, d_max);
    for (long d = 1; d <= d_max; ++d) {
        LaurentSlice acc = LaurentSlice::zero(vars.nvars());
        for (long e = 1; e <= d; ++e) {
            if (d % e) continue;
            long mu = mobius(e);
            if (mu == 0) continue;
            acc = slice_add(acc, slice_scale(nr[d / e - 1], Rat(mu, d)));
        }
        if (vars.numeric() && !acc.is_zero() && !is_integer(acc.terms.begin()->second))
            throw integrality_error("orbit_profile: Ntilde_" + std::to_string(d) +
                                    " is not an integer for " + spec.name);
        p.tilde.push_back(std::move(acc));
    }
    return p;
}

// Z(X,T) via exp(sum N_r T^r / r), cross-checked against the Euler product
// prod_d (1 - T^d)^{-Ntilde_d}.
inline TruncatedSeries zeta_series(const VarietySpec &spec, const VariableSpec &vars, long t_cap) {
    if (t_cap < 0 || t_cap >= kInf) throw std::invalid_argument("zeta_series: need a finite T-cap");
    TruncatedSeries logz(vars, t_cap);
    for (long r = 1; r <= t_cap; ++r)
        logz.set_slice(r, slice_scale(count_slice(spec, vars, r), Rat(1, r)));
    TruncatedSeries via_exp = exp(logz, t_cap);

    auto profile = orbit_profile(spec, vars, t_cap);
    TruncatedSeries via_product = series_one(vars, t_cap);
    for (long d = 1; d <= t_cap; ++d) {
        TruncatedSeries factor = series_one(vars, t_cap);
        factor.set_slice(d, LaurentSlice::constant(vars.nvars(), -1));
        via_product = mul(via_product, pow_series(factor, slice_neg(profile.tilde[d - 1]), t_cap));
    }
    if (!series_equal_on_common(via_exp, via_product))
        throw std::logic_error("zeta_series: exponential and Euler-product routes disagree");
    return via_exp;
}

struct FactoredZeta {
    std::vector<std::pair<long, long>> factors; // (j, n_j): Z = prod (1 - q^j T)^{-n_j}
};

inline FactoredZeta factored(const VarietySpec &spec) {
    spec.validate();
    FactoredZeta f;
    for (const auto &[j, c] : spec.counting)
        f.factors.emplace_back(j, numerator(c).convert_to<long>());
    return f;
}

// |GL_n(F_q)| = prod_{k=0}^{n-1} (q^n - q^k)
inline QPoly gl_order_poly(long n) {
    if (n < 1) throw std::invalid_argument("gl_order: n must be >= 1");
    QPoly r{{0, 1}};
    for (long k = 0; k < n; ++k) r = qpoly_mul(r, QPoly{{n, 1}, {k, -1}});
    return r;
}

inline LaurentSlice gl_order(long n, const VariableSpec &vars) {
    if (vars.numeric()) return LaurentSlice::constant(0, qpoly_eval(gl_order_poly(n), *vars.q_value));
    return slice_from_qpoly(vars.nvars(), 0, gl_order_poly(n));
}

inline Int gl_order_int(long n, long q) {
    return as_integer(qpoly_eval(gl_order_poly(n), Rat(q)));
}

} // namespace cozeta
