#pragma once

// Coloring setups C = (colors, degree, weight).  A setup is data: a color
// enumerator per degree and a weight function evaluated at d-th power
// variables (symbolically q -> q^d, numerically q -> q0^d).

#include <functional>
#include <string>
#include <vector>

#include "partitions.hpp"
#include "series.hpp"

namespace cozeta {

struct EngineCaps {
    long t_cap = 6;
    long q_cap = 24; // absolute exponent cap for q expansions (symbolic mode)
};

struct ColoringSetup {
    std::string name;
    bool homogeneous = false;
    bool weight_uses_q = false;

    // colors of degree k >= 1 (degree 0 is always the unique empty color)
    std::function<std::vector<Partition>(long)> colors;

    // W(lambda)(t^d) as a scalar slice in the ambient variables
    std::function<LaurentSlice(const Partition &, long d, const VariableSpec &, const EngineCaps &)>
        weight;
};

namespace detail {

inline LaurentSlice weight_one(const VariableSpec &vars) {
    return LaurentSlice::constant(vars.nvars(), 1);
}

// 1/P(q^d) expanded at q = 0 within the caps (or evaluated at q0^d).
inline LaurentSlice inv_poly_weight(const QPoly &p, long d, const VariableSpec &vars,
                                    const EngineCaps &caps) {
    if (vars.numeric()) {
        Rat v = qpoly_eval(p, rat_pow(*vars.q_value, d));
        if (v == 0) throw std::domain_error("weight denominator vanishes at q");
        return LaurentSlice::constant(0, Rat(1) / v);
    }
    LaurentSlice den = slice_from_qpoly(vars.nvars(), 0, qpoly_subst_pow(p, d));
    Exp qcap(vars.nvars(), kInf);
    qcap[0] = caps.q_cap;
    LaurentSlice r = slice_inv(den, qcap);
    r.box.cap[0] = std::min(r.box.cap[0], caps.q_cap);
    r.normalize();
    return r;
}

} // namespace detail

// standard: one color per degree, weight 1; Z_C(X) is the usual zeta function
inline ColoringSetup standard_setup() {
    ColoringSetup s;
    s.name = "standard";
    s.colors = [](long k) {
        return std::vector<Partition>{Partition{{k}}};
    };
    s.weight = [](const Partition &, long, const VariableSpec &vars, const EngineCaps &) {
        return detail::weight_one(vars);
    };
    return s;
}

// partition: all partitions, weight 1
inline ColoringSetup partition_setup() {
    ColoringSetup s;
    s.name = "partition";
    s.colors = [](long k) { return partitions_of(k); };
    s.weight = [](const Partition &, long, const VariableSpec &vars, const EngineCaps &) {
        return detail::weight_one(vars);
    };
    return s;
}

// centralizer: W(lambda) = 1/a_lambda(q); weights at t^d are 1/a_lambda(q^d)
inline ColoringSetup centralizer_setup() {
    ColoringSetup s;
    s.name = "centralizer";
    s.weight_uses_q = true;
    s.colors = [](long k) { return partitions_of(k); };
    s.weight = [](const Partition &lam, long d, const VariableSpec &vars, const EngineCaps &caps) {
        return detail::inv_poly_weight(a_lambda(lam), d, vars, caps);
    };
    return s;
}

// commuting: W(lambda) = q^{<l,l>}/a_lambda(q)
inline ColoringSetup commuting_setup() {
    ColoringSetup s;
    s.name = "commuting";
    s.weight_uses_q = true;
    s.colors = [](long k) { return partitions_of(k); };
    s.weight = [](const Partition &lam, long d, const VariableSpec &vars, const EngineCaps &caps) {
        const long pairing = stats(lam).pairing;
        LaurentSlice base = detail::inv_poly_weight(a_lambda(lam), d, vars, caps);
        if (vars.numeric()) return slice_scale(base, rat_pow(*vars.q_value, pairing * d));
        Exp shift(vars.nvars(), 0);
        shift[0] = pairing * d;
        return slice_shift(base, shift);
    };
    return s;
}

inline ColoringSetup make_setup(const std::string &name) {
    if (name == "standard") return standard_setup();
    if (name == "partition") return partition_setup();
    if (name == "centralizer") return centralizer_setup();
    if (name == "commuting") return commuting_setup();
    throw std::invalid_argument("unknown setup: " + name);
}

} // namespace cozeta
