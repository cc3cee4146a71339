#pragma once

// Windowed Laurent arithmetic in the coefficient ring
// Z[[t_1,...,t_N]][t_1^-1,...,t_N^-1] (rationals internally).
//
// A slice stores finitely many terms together with a precision box.  The
// semantics per variable i are:
//   * no term has exponent e_i < floor_i (floor is a valuation bound);
//   * coefficients with e_i <= cap_i in every variable are exact;
//   * above some cap the series is unknown (truncated).
// A cap of kInf means exact in that direction; the all-kInf box is an exact
// (finitely supported) Laurent polynomial.

#include <algorithm>
#include <limits>
#include <map>
#include <vector>

#include "rational.hpp"

namespace cozeta {

inline constexpr long kInf = std::numeric_limits<long>::max() / 4;

inline long sat_add(long a, long b) {
    if (a >= kInf || b >= kInf) return kInf;
    if (a <= -kInf || b <= -kInf) return -kInf;
    return a + b;
}
inline long sat_mul(long a, long k) {
    if (a >= kInf) return kInf;
    if (a <= -kInf) return -kInf;
    long r = a * k;
    if (r >= kInf) return kInf;
    if (r <= -kInf) return -kInf;
    return r;
}

using Exp = std::vector<long>; // exponent vector, lex-ordered as map key

struct Box {
    Exp floor; // valuation bounds (kInf for the zero slice)
    Exp cap;   // exactness caps (kInf = exact)

    static Box exact_zero(std::size_t n) { return {Exp(n, kInf), Exp(n, kInf)}; }
    static Box full(std::size_t n) { return {Exp(n, -kInf), Exp(n, kInf)}; }

    std::size_t size() const { return floor.size(); }

    bool contains(const Exp &e) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > cap[i]) return false;
        return true;
    }
};

struct LaurentSlice {
    std::map<Exp, Rat> terms;
    Box box;

    static LaurentSlice zero(std::size_t n) { return {{}, Box::exact_zero(n)}; }

    static LaurentSlice constant(std::size_t n, const Rat &c) {
        LaurentSlice s = zero(n);
        if (c != 0) s.terms[Exp(n)] = c;
        s.normalize();
        return s;
    }

    static LaurentSlice monomial(std::size_t n, const Exp &e, const Rat &c) {
        LaurentSlice s = zero(n);
        if (c != 0) s.terms[e] = c;
        s.normalize();
        return s;
    }

    std::size_t nvars() const { return box.size(); }
    bool is_zero() const { return terms.empty(); }
    bool exact() const {
        for (long c : box.cap)
            if (c < kInf) return false;
        return true;
    }

    // Drop zero coefficients and terms outside the caps; tighten floors to the
    // support where that is sound (always for N<=1 or exact slices, since then
    // unknown terms can only live above the caps).
    void normalize() {
        for (auto it = terms.begin(); it != terms.end();) {
            if (it->second == 0 || !box.contains(it->first))
                it = terms.erase(it);
            else
                ++it;
        }
        const std::size_t n = nvars();
        if (terms.empty()) {
            if (exact()) {
                box = Box::exact_zero(n);
            } else if (n == 1) {
                box.floor[0] = std::max(box.floor[0], sat_add(box.cap[0], 1));
            }
            return;
        }
        Exp lo(n, kInf);
        for (const auto &[e, c] : terms)
            for (std::size_t i = 0; i < n; ++i) lo[i] = std::min(lo[i], e[i]);
        for (std::size_t i = 0; i < n; ++i) {
            if (n == 1 || exact())
                box.floor[i] = lo[i]; // no unknown terms below the support
            else
                box.floor[i] = std::min(box.floor[i], lo[i]);
        }
    }
};

inline LaurentSlice slice_add(const LaurentSlice &a, const LaurentSlice &b) {
    LaurentSlice r;
    r.terms = a.terms;
    for (const auto &[e, c] : b.terms) {
        auto [it, fresh] = r.terms.emplace(e, c);
        if (!fresh) it->second += c;
    }
    const std::size_t n = a.nvars();
    r.box.floor.resize(n);
    r.box.cap.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        r.box.floor[i] = std::min(a.box.floor[i], b.box.floor[i]);
        r.box.cap[i] = std::min(a.box.cap[i], b.box.cap[i]);
    }
    r.normalize();
    return r;
}

inline LaurentSlice slice_neg(LaurentSlice a) {
    for (auto &[e, c] : a.terms) c = -c;
    return a;
}

inline LaurentSlice slice_sub(const LaurentSlice &a, const LaurentSlice &b) {
    return slice_add(a, slice_neg(b));
}

inline LaurentSlice slice_scale(LaurentSlice a, const Rat &c) {
    if (c == 0) {
        // scaling by zero is exact regardless of a's window
        return LaurentSlice::zero(a.nvars());
    }
    for (auto &[e, v] : a.terms) v *= c;
    return a;
}

inline LaurentSlice slice_mul(const LaurentSlice &a, const LaurentSlice &b) {
    const std::size_t n = a.nvars();
    LaurentSlice r = LaurentSlice::zero(n);
    for (std::size_t i = 0; i < n; ++i) {
        r.box.floor[i] = sat_add(a.box.floor[i], b.box.floor[i]);
        r.box.cap[i] = std::min(sat_add(a.box.cap[i], b.box.floor[i]),
                                sat_add(b.box.cap[i], a.box.floor[i]));
    }
    Exp e(n);
    for (const auto &[ea, ca] : a.terms)
        for (const auto &[eb, cb] : b.terms) {
            for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
            auto [it, fresh] = r.terms.emplace(e, ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    r.normalize();
    return r;
}

// Shift every exponent by s (multiplication by the monomial t^s).
inline LaurentSlice slice_shift(LaurentSlice a, const Exp &s) {
    std::map<Exp, Rat> shifted;
    for (auto &[e, c] : a.terms) {
        Exp f = e;
        for (std::size_t i = 0; i < f.size(); ++i) f[i] += s[i];
        shifted.emplace(std::move(f), std::move(c));
    }
    a.terms = std::move(shifted);
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        a.box.floor[i] = sat_add(a.box.floor[i], s[i]);
        a.box.cap[i] = sat_add(a.box.cap[i], s[i]);
    }
    return a;
}

// Exponent scaling t -> t^k (Adams operation on a slice).
inline LaurentSlice slice_adams(const LaurentSlice &a, long k) {
    if (k <= 0) throw std::invalid_argument("slice_adams: k must be positive");
    LaurentSlice r;
    for (const auto &[e, c] : a.terms) {
        Exp f = e;
        for (auto &x : f) x *= k;
        r.terms.emplace(std::move(f), c);
    }
    const std::size_t n = a.nvars();
    r.box.floor.resize(n);
    r.box.cap.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        r.box.floor[i] = sat_mul(a.box.floor[i], k);
        r.box.cap[i] = sat_mul(a.box.cap[i], k);
    }
    r.normalize();
    return r;
}

// Inverse in the Laurent ring.  Requires a unique minimal term (true for
// N <= 1 whenever a != 0).  target_cap bounds the expansion when a is exact;
// for windowed input the result window is also limited by a's own caps.
inline LaurentSlice slice_inv(const LaurentSlice &a, const Exp &target_cap) {
    const std::size_t n = a.nvars();
    if (a.is_zero()) throw std::domain_error("slice_inv: zero is not invertible");
    if (n == 0) {
        LaurentSlice r = LaurentSlice::zero(0);
        r.terms[Exp{}] = Rat(1) / a.terms.begin()->second;
        return r;
    }
    Exp v(n, kInf);
    for (const auto &[e, c] : a.terms)
        for (std::size_t i = 0; i < n; ++i) v[i] = std::min(v[i], e[i]);
    auto lead = a.terms.find(v);
    if (lead == a.terms.end())
        throw std::domain_error("slice_inv: leading term is not a single monomial");
    const Rat c0 = lead->second;

    // a = c0 * t^v * (1 + r) with r supported on exponents >= 0, != 0.
    Exp neg_v(n);
    for (std::size_t i = 0; i < n; ++i) neg_v[i] = -v[i];
    LaurentSlice rpart = slice_scale(slice_shift(a, neg_v), Rat(1) / c0);
    rpart.terms.erase(Exp(n));

    // Working caps for the geometric series: result caps shifted back by v.
    Box wbox;
    wbox.floor = Exp(n, 0);
    wbox.cap.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        long from_a = sat_add(a.box.cap[i], -2 * v[i]); // honest cap of the inverse
        long want = std::min(target_cap[i], from_a);
        wbox.cap[i] = sat_add(want, v[i]);
    }
    LaurentSlice acc = LaurentSlice::constant(n, 1);
    acc.box.cap = wbox.cap;
    acc.normalize();
    LaurentSlice pw = acc;
    LaurentSlice mr = slice_neg(rpart);
    for (std::size_t i = 0; i < n; ++i) mr.box.cap[i] = std::min(mr.box.cap[i], wbox.cap[i]);
    mr.normalize();
    // r has positive support, so r^j dies once j exceeds every finite cap.
    long guard = 2;
    for (std::size_t i = 0; i < n; ++i)
        if (wbox.cap[i] < kInf) guard = sat_add(guard, std::max(0L, wbox.cap[i]) + 1);
    for (long j = 0; j < guard && !pw.is_zero(); ++j) {
        pw = slice_mul(pw, mr);
        for (std::size_t i = 0; i < n; ++i) pw.box.cap[i] = std::min(pw.box.cap[i], wbox.cap[i]);
        pw.normalize();
        if (!pw.is_zero() && j + 1 == guard)
            throw precision_error("slice_inv: expansion did not terminate within caps");
        acc = slice_add(acc, pw);
        for (std::size_t i = 0; i < n; ++i) acc.box.cap[i] = std::min(acc.box.cap[i], wbox.cap[i]);
    }
    acc = slice_scale(slice_shift(acc, neg_v), Rat(1) / c0);
    acc.normalize();
    return acc;
}

inline LaurentSlice slice_pow_int(const LaurentSlice &a, long k, const Exp &target_cap) {
    if (k < 0) return slice_pow_int(slice_inv(a, target_cap), -k, target_cap);
    LaurentSlice r = LaurentSlice::constant(a.nvars(), 1);
    LaurentSlice base = a;
    for (long m = k; m > 0; m >>= 1) {
        if (m & 1) r = slice_mul(r, base);
        if (m > 1) base = slice_mul(base, base);
    }
    return r;
}

// Exact equality of the known parts: compare all coefficients inside the
// common caps (missing term = zero).
inline bool slice_equal_on_common(const LaurentSlice &a, const LaurentSlice &b,
                                  Exp *where = nullptr, Rat *lhs = nullptr, Rat *rhs = nullptr) {
    const std::size_t n = a.nvars();
    Exp cap(n);
    for (std::size_t i = 0; i < n; ++i) cap[i] = std::min(a.box.cap[i], b.box.cap[i]);
    auto check = [&](const Exp &e) {
        for (std::size_t i = 0; i < n; ++i)
            if (e[i] > cap[i]) return true; // outside common window, ignore
        auto ia = a.terms.find(e);
        auto ib = b.terms.find(e);
        Rat va = ia == a.terms.end() ? Rat(0) : ia->second;
        Rat vb = ib == b.terms.end() ? Rat(0) : ib->second;
        if (va == vb) return true;
        if (where) *where = e;
        if (lhs) *lhs = va;
        if (rhs) *rhs = vb;
        return false;
    };
    for (const auto &[e, c] : a.terms)
        if (!check(e)) return false;
    for (const auto &[e, c] : b.terms)
        if (!check(e)) return false;
    return true;
}

// ---- Dense polynomials in a single variable q, used as scalar inputs ----

using QPoly = std::map<long, Rat>; // exponent -> coefficient, zero coeffs absent

inline QPoly qpoly_mul(const QPoly &a, const QPoly &b) {
    QPoly r;
    for (const auto &[ea, ca] : a)
        for (const auto &[eb, cb] : b) {
            Rat &v = r[ea + eb];
            v += ca * cb;
            if (v == 0) r.erase(ea + eb);
        }
    return r;
}

inline QPoly qpoly_add(QPoly a, const QPoly &b) {
    for (const auto &[e, c] : b) {
        Rat &v = a[e];
        v += c;
        if (v == 0) a.erase(e);
    }
    return a;
}

inline QPoly qpoly_scale(QPoly a, const Rat &c) {
    if (c == 0) return {};
    for (auto &[e, v] : a) v *= c;
    return a;
}

// q -> q^k, also valid for k = -1 (reciprocal substitution).
inline QPoly qpoly_subst_pow(const QPoly &a, long k) {
    QPoly r;
    for (const auto &[e, c] : a) r[e * k] = c;
    return r;
}

inline Rat qpoly_eval(const QPoly &a, const Rat &q) {
    Rat r = 0;
    for (const auto &[e, c] : a) r += c * rat_pow(q, e);
    return r;
}

inline long qpoly_min_exp(const QPoly &a) {
    return a.empty() ? 0 : a.begin()->first;
}
inline long qpoly_max_exp(const QPoly &a) {
    return a.empty() ? 0 : a.rbegin()->first;
}

inline LaurentSlice slice_from_qpoly(std::size_t n, std::size_t var, const QPoly &p) {
    LaurentSlice s = LaurentSlice::zero(n);
    for (const auto &[e, c] : p) {
        Exp x(n, 0);
        x[var] = e;
        s.terms[x] = c;
    }
    s.normalize();
    return s;
}

} // namespace cozeta
