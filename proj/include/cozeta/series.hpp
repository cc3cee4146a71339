#pragma once

// Exact truncated series in R[[T]], R a Laurent-series ring over Q.  Each
// T-coefficient is a windowed LaurentSlice, so precision is tracked per
// T-degree (different degrees routinely have very different q-valuations).

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "laurent.hpp"

namespace cozeta {

struct VariableSpec {
    std::vector<std::string> laurent; // Laurent variable names; "q" first when present
    std::string series_var = "T";
    std::optional<Rat> q_value; // numeric mode: q specialized, laurent must be empty

    std::size_t nvars() const { return laurent.size(); }
    bool numeric() const { return q_value.has_value(); }

    static VariableSpec symbolic_q() { return {{"q"}, "T", std::nullopt}; }
    static VariableSpec numeric_q(const Rat &q0) { return {{}, "T", q0}; }

    friend bool operator==(const VariableSpec &a, const VariableSpec &b) {
        return a.laurent == b.laurent && a.series_var == b.series_var && a.q_value == b.q_value;
    }

    void validate() const {
        if (numeric() && !laurent.empty())
            throw incompatible_error("numeric mode must not track Laurent variables");
        for (std::size_t i = 0; i < laurent.size(); ++i)
            for (std::size_t j = i + 1; j < laurent.size(); ++j)
                if (laurent[i] == laurent[j] || laurent[i] == series_var)
                    throw incompatible_error("variable names must be distinct");
    }
};

struct MonomialKey {
    long t_deg = 0;
    Exp exps;
};

class TruncatedSeries {
  public:
    VariableSpec vars;
    long t_cap = kInf;
    std::map<long, LaurentSlice> coeffs; // absent degree <= t_cap means exact zero

    TruncatedSeries() = default;
    explicit TruncatedSeries(VariableSpec v, long cap = kInf) : vars(std::move(v)), t_cap(cap) {}

    std::size_t nvars() const { return vars.nvars(); }

    LaurentSlice slice_at(long d) const {
        if (d < 0) throw std::invalid_argument("negative T-degree");
        if (d > t_cap)
            throw precision_error("T^" + std::to_string(d) + " requested beyond T-cap " +
                                  std::to_string(t_cap));
        auto it = coeffs.find(d);
        return it == coeffs.end() ? LaurentSlice::zero(nvars()) : it->second;
    }

    void set_slice(long d, LaurentSlice s) {
        s.normalize();
        if (s.is_zero() && s.exact())
            coeffs.erase(d);
        else
            coeffs[d] = std::move(s);
    }

    void normalize() {
        for (auto it = coeffs.begin(); it != coeffs.end();) {
            it->second.normalize();
            if (it->first > t_cap || (it->second.is_zero() && it->second.exact()))
                it = coeffs.erase(it);
            else
                ++it;
        }
    }

    bool is_zero() const { return coeffs.empty(); }

    // smallest degree that could carry a nonzero coefficient
    long t_valuation() const { return coeffs.empty() ? kInf : coeffs.begin()->first; }
};

inline void require_compatible(const TruncatedSeries &a, const TruncatedSeries &b) {
    if (!(a.vars == b.vars))
        throw incompatible_error("series have incompatible variables or modes");
}

inline TruncatedSeries series_zero(const VariableSpec &v, long t_cap = kInf) {
    return TruncatedSeries(v, t_cap);
}

inline TruncatedSeries series_const(const VariableSpec &v, const Rat &c, long t_cap = kInf) {
    TruncatedSeries s(v, t_cap);
    s.set_slice(0, LaurentSlice::constant(v.nvars(), c));
    return s;
}

inline TruncatedSeries series_one(const VariableSpec &v, long t_cap = kInf) {
    return series_const(v, 1, t_cap);
}

inline TruncatedSeries series_monomial(const VariableSpec &v, const MonomialKey &key, const Rat &c,
                                       long t_cap = kInf) {
    TruncatedSeries s(v, t_cap);
    s.set_slice(key.t_deg, LaurentSlice::monomial(v.nvars(), key.exps, c));
    return s;
}

inline TruncatedSeries series_from_slice(const VariableSpec &v, long d, LaurentSlice sl,
                                         long t_cap = kInf) {
    TruncatedSeries s(v, t_cap);
    s.set_slice(d, std::move(sl));
    return s;
}

inline TruncatedSeries add(const TruncatedSeries &a, const TruncatedSeries &b) {
    require_compatible(a, b);
    TruncatedSeries r(a.vars, std::min(a.t_cap, b.t_cap));
    for (const auto &[d, s] : a.coeffs)
        if (d <= r.t_cap) r.coeffs[d] = s;
    for (const auto &[d, s] : b.coeffs) {
        if (d > r.t_cap) continue;
        auto it = r.coeffs.find(d);
        if (it == r.coeffs.end())
            r.coeffs[d] = s;
        else
            it->second = slice_add(it->second, s);
    }
    r.normalize();
    return r;
}

inline TruncatedSeries neg(TruncatedSeries a) {
    for (auto &[d, s] : a.coeffs) s = slice_neg(s);
    return a;
}

inline TruncatedSeries sub(const TruncatedSeries &a, const TruncatedSeries &b) {
    return add(a, neg(b));
}

inline TruncatedSeries scale(TruncatedSeries a, const Rat &c) {
    if (c == 0) return series_zero(a.vars, a.t_cap);
    for (auto &[d, s] : a.coeffs) s = slice_scale(s, c);
    return a;
}

inline TruncatedSeries scale_slice(const TruncatedSeries &a, const LaurentSlice &c) {
    TruncatedSeries r(a.vars, a.t_cap);
    for (const auto &[d, s] : a.coeffs) r.set_slice(d, slice_mul(s, c));
    return r;
}

inline TruncatedSeries mul(const TruncatedSeries &a, const TruncatedSeries &b) {
    require_compatible(a, b);
    const long tva = a.t_valuation(), tvb = b.t_valuation();
    long cap = std::min(sat_add(a.t_cap, tvb), sat_add(b.t_cap, tva));
    TruncatedSeries r(a.vars, cap);
    for (const auto &[da, sa] : a.coeffs)
        for (const auto &[db, sb] : b.coeffs) {
            long d = da + db;
            if (d > cap) continue;
            LaurentSlice prod = slice_mul(sa, sb);
            auto it = r.coeffs.find(d);
            if (it == r.coeffs.end())
                r.coeffs[d] = std::move(prod);
            else
                it->second = slice_add(it->second, prod);
        }
    r.normalize();
    return r;
}

// Optional explicit expansion bounds for operations that produce infinite
// expansions out of exact (finitely supported) inputs.
struct ExpandTarget {
    std::optional<long> t_cap;
    std::optional<Exp> q_cap; // per Laurent variable
};

inline Exp effective_qcap(const TruncatedSeries &a, const ExpandTarget &tgt) {
    if (tgt.q_cap) {
        if (tgt.q_cap->size() != a.nvars())
            throw incompatible_error("q_cap arity mismatch");
        return *tgt.q_cap;
    }
    return Exp(a.nvars(), kInf);
}

inline TruncatedSeries inv(const TruncatedSeries &a, const ExpandTarget &tgt = {}) {
    const LaurentSlice s0 = a.slice_at(0);
    if (s0.is_zero()) throw std::domain_error("inv: T^0 part is zero");
    Exp qcap = effective_qcap(a, tgt);
    LaurentSlice b0 = slice_inv(s0, qcap);

    long cap = std::min(a.t_cap, tgt.t_cap.value_or(kInf));
    TruncatedSeries tail(a.vars, a.t_cap); // y := a - a_0, positive T-degrees
    for (const auto &[d, s] : a.coeffs)
        if (d > 0) tail.coeffs.emplace(d, s);
    if (tail.is_zero())
        return series_from_slice(a.vars, 0, std::move(b0), a.t_cap);
    if (cap >= kInf) throw precision_error("inv: infinite T expansion requires a T-cap");

    // 1/a = b0 * sum_j (-b0*y)^j
    TruncatedSeries base = scale_slice(tail, b0);
    base = neg(base);
    base.t_cap = std::min(base.t_cap, cap);
    base.normalize();
    TruncatedSeries acc = series_one(a.vars, cap);
    TruncatedSeries pw = acc;
    for (long j = 1; j <= cap && !pw.is_zero(); ++j) {
        pw = mul(pw, base);
        pw.t_cap = std::min(pw.t_cap, cap);
        pw.normalize();
        acc = add(acc, pw);
    }
    acc = scale_slice(acc, b0);
    acc.t_cap = std::min(acc.t_cap, cap);
    acc.normalize();
    return acc;
}

inline TruncatedSeries pow_int(const TruncatedSeries &a, long k, const ExpandTarget &tgt = {}) {
    if (k < 0) return pow_int(inv(a, tgt), -k, tgt);
    TruncatedSeries r = series_one(a.vars, std::min(a.t_cap, tgt.t_cap.value_or(kInf)));
    if (k == 0) return r;
    TruncatedSeries base = a;
    for (long m = k; m > 0; m >>= 1) {
        if (m & 1) r = mul(r, base);
        if (m > 1) base = mul(base, base);
    }
    return r;
}

namespace detail {
inline void require_unit_constant(const LaurentSlice &s0) {
    if (s0.terms.size() != 1) throw std::domain_error("series constant term is not 1");
    const auto &[e, c] = *s0.terms.begin();
    for (long x : e)
        if (x != 0) throw std::domain_error("series constant term is not 1");
    if (c != 1) throw std::domain_error("series constant term is not 1");
}
} // namespace detail

// Formal log of a = 1 + (positive T-degree terms).
inline TruncatedSeries log(const TruncatedSeries &a, std::optional<long> t_cap = {}) {
    const LaurentSlice s0 = a.slice_at(0);
    detail::require_unit_constant(s0);
    long cap = std::min(a.t_cap, t_cap.value_or(kInf));
    TruncatedSeries y(a.vars, a.t_cap);
    for (const auto &[d, s] : a.coeffs) y.coeffs.emplace(d, s);
    // keep the window restriction of the constant slice, minus the exact 1
    y.set_slice(0, slice_sub(s0, LaurentSlice::constant(a.nvars(), 1)));
    if (y.is_zero()) return series_zero(a.vars, cap);
    if (cap >= kInf) throw precision_error("log: infinite T expansion requires a T-cap");
    y.t_cap = std::min(y.t_cap, cap);
    y.normalize();
    TruncatedSeries acc = series_zero(a.vars, cap);
    TruncatedSeries pw = series_one(a.vars, cap);
    for (long k = 1; k <= cap; ++k) {
        pw = mul(pw, y);
        pw.t_cap = std::min(pw.t_cap, cap);
        pw.normalize();
        if (pw.is_zero()) break;
        acc = add(acc, scale(pw, Rat((k % 2) ? 1 : -1, k)));
    }
    return acc;
}

// Formal exp of a with zero constant term.
inline TruncatedSeries exp(const TruncatedSeries &a, std::optional<long> t_cap = {}) {
    const LaurentSlice s0 = a.slice_at(0);
    if (!s0.terms.empty()) throw std::domain_error("exp: nonzero constant term");
    long cap = std::min(a.t_cap, t_cap.value_or(kInf));
    if (a.is_zero()) return series_one(a.vars, cap);
    if (cap >= kInf) throw precision_error("exp: infinite T expansion requires a T-cap");
    TruncatedSeries y = a;
    y.t_cap = std::min(y.t_cap, cap);
    y.normalize();
    TruncatedSeries acc = series_one(a.vars, cap);
    // thread the T^0 window restriction, if any, through the constant term
    if (!s0.exact()) acc.set_slice(0, slice_add(LaurentSlice::constant(a.nvars(), 1), s0));
    TruncatedSeries pw = series_one(a.vars, cap);
    Rat fact = 1;
    for (long k = 1; k <= cap; ++k) {
        pw = mul(pw, y);
        pw.t_cap = std::min(pw.t_cap, cap);
        pw.normalize();
        if (pw.is_zero()) break;
        fact *= k;
        acc = add(acc, scale(pw, Rat(1) / fact));
    }
    return acc;
}

// a^s for a = 1 + O(T) and a T-free exponent s (e.g. a polynomial in q).
inline TruncatedSeries pow_series(const TruncatedSeries &a, const LaurentSlice &s, long t_cap) {
    if (s.terms.size() == 1) {
        const auto &[e, c] = *s.terms.begin();
        bool scalar = true;
        for (long x : e) scalar = scalar && x == 0;
        if (scalar && is_integer(c) && s.exact()) {
            long k = numerator(c).convert_to<long>();
            if (Rat(k) == c) return pow_int(a, k, {t_cap, {}});
        }
    }
    if (s.is_zero() && s.exact()) return series_one(a.vars, std::min(a.t_cap, t_cap));
    return exp(scale_slice(log(a, t_cap), s), t_cap);
}

// Substitution (t, T) -> (t^k, T^k).
inline TruncatedSeries adams(const TruncatedSeries &a, long k) {
    if (k <= 0) throw std::invalid_argument("adams: k must be positive");
    TruncatedSeries r(a.vars, a.t_cap >= kInf ? kInf : (a.t_cap + 1) * k - 1);
    for (const auto &[d, s] : a.coeffs) r.coeffs.emplace(d * k, slice_adams(s, k));
    r.normalize();
    return r;
}

// T -> t^m T^d with d >= 1.
inline TruncatedSeries subst_T_monomial(const TruncatedSeries &a, const MonomialKey &key) {
    if (key.t_deg < 1)
        throw std::domain_error("subst_T_monomial: T-degree of the target must be >= 1");
    if (key.exps.size() != a.nvars()) throw incompatible_error("substitution arity mismatch");
    TruncatedSeries r(a.vars, a.t_cap >= kInf ? kInf : (a.t_cap + 1) * key.t_deg - 1);
    for (const auto &[j, s] : a.coeffs) {
        Exp shift(key.exps);
        for (auto &x : shift) x *= j;
        r.coeffs.emplace(j * key.t_deg, slice_shift(s, shift));
    }
    r.normalize();
    return r;
}

// The T^n coefficient; erroring (not zero) beyond the cap.
inline LaurentSlice coeff_of_T(const TruncatedSeries &a, long n) { return a.slice_at(n); }

// Laurent expansion at q = 0 of P/Q for integer polynomials P, Q in q.
inline TruncatedSeries expand_rational_q(const VariableSpec &vars, const QPoly &num,
                                         const QPoly &den, const Exp &q_cap, long t_cap = kInf) {
    if (den.empty()) throw std::domain_error("expand_rational_q: zero denominator");
    if (vars.numeric()) {
        Rat d = qpoly_eval(den, *vars.q_value);
        if (d == 0) throw std::domain_error("expand_rational_q: denominator vanishes at q");
        return series_const(vars, qpoly_eval(num, *vars.q_value) / d, t_cap);
    }
    if (vars.nvars() == 0) throw incompatible_error("expand_rational_q: no q variable");
    LaurentSlice n = slice_from_qpoly(vars.nvars(), 0, num);
    LaurentSlice d = slice_from_qpoly(vars.nvars(), 0, den);
    LaurentSlice r = slice_mul(n, slice_inv(d, q_cap));
    for (std::size_t i = 0; i < r.box.cap.size(); ++i) r.box.cap[i] = std::min(r.box.cap[i], q_cap[i]);
    r.normalize();
    return series_from_slice(vars, 0, std::move(r), t_cap);
}

// ---- comparison on common windows ----

struct Mismatch {
    long t_deg = 0;
    Exp exps;
    Rat lhs, rhs;
};

enum class CompareStatus { Equal, Mismatch, WindowTooSmall };

struct CompareResult {
    CompareStatus status = CompareStatus::Equal;
    Mismatch first_mismatch;
    long t_checked = 0; // degrees 0..t_checked compared
};

// Compare a and b on the common window.  If required_q_width is given, each
// compared T-degree must be known at least that far above the lowest term
// present on either side (otherwise WindowTooSmall).
inline CompareResult series_compare(const TruncatedSeries &a, const TruncatedSeries &b,
                                    std::optional<long> required_t = {},
                                    std::optional<long> required_q_width = {}) {
    require_compatible(a, b);
    CompareResult res;
    long cap = std::min(a.t_cap, b.t_cap);
    if (required_t && *required_t > cap) {
        res.status = CompareStatus::WindowTooSmall;
        return res;
    }
    if (required_t) cap = *required_t;
    const std::size_t n = a.nvars();
    for (long d = 0; d <= cap && d < kInf; ++d) {
        LaurentSlice sa = a.slice_at(d);
        LaurentSlice sb = b.slice_at(d);
        if (required_q_width && n > 0) {
            for (std::size_t i = 0; i < n; ++i) {
                long lo = kInf;
                for (const auto &[e, c] : sa.terms) lo = std::min(lo, e[i]);
                for (const auto &[e, c] : sb.terms) lo = std::min(lo, e[i]);
                if (lo >= kInf) lo = 0;
                long common_cap = std::min(sa.box.cap[i], sb.box.cap[i]);
                if (common_cap < sat_add(lo, *required_q_width)) {
                    res.status = CompareStatus::WindowTooSmall;
                    res.first_mismatch.t_deg = d;
                    return res;
                }
            }
        }
        Exp where;
        Rat lhs, rhs;
        if (!slice_equal_on_common(sa, sb, &where, &lhs, &rhs)) {
            res.status = CompareStatus::Mismatch;
            res.first_mismatch = {d, where, lhs, rhs};
            return res;
        }
        if (cap >= kInf && d > std::max(a.coeffs.empty() ? 0 : a.coeffs.rbegin()->first,
                                        b.coeffs.empty() ? 0 : b.coeffs.rbegin()->first))
            break; // both exact beyond their support
        res.t_checked = d;
    }
    return res;
}

inline bool series_equal_on_common(const TruncatedSeries &a, const TruncatedSeries &b) {
    return series_compare(a, b).status == CompareStatus::Equal;
}

// Clamp all slice caps of var i to at most c (used after truncated products).
inline void clamp_q_cap(TruncatedSeries &s, std::size_t var, long c,
                        std::function<long(long)> per_degree = {}) {
    for (long d = 0; d <= s.t_cap && d < kInf; ++d) {
        long lim = per_degree ? per_degree(d) : c;
        auto it = s.coeffs.find(d);
        if (it == s.coeffs.end()) {
            if (lim >= kInf) continue;
            LaurentSlice z = LaurentSlice::zero(s.nvars());
            z.box.cap[var] = lim;
            z.box.floor[var] = sat_add(lim, 1);
            s.coeffs.emplace(d, std::move(z));
        } else {
            it->second.box.cap[var] = std::min(it->second.box.cap[var], lim);
            it->second.normalize();
        }
    }
    s.normalize();
}

} // namespace cozeta
