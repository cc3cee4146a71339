#pragma once

// Integer partitions and the centralizer-order statistics attached to a
// unipotent Jordan type: n(lambda), multiplicities, <lambda,lambda>, the
// q-Pochhammer factors phi_m and the centralizer order polynomial a_lambda.

#include <map>
#include <vector>

#include "laurent.hpp"

namespace cozeta {

struct Partition {
    std::vector<long> parts; // non-increasing, all >= 1; empty = the zero color

    long size() const {
        long s = 0;
        for (long p : parts) s += p;
        return s;
    }

    void validate() const {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 1) throw std::invalid_argument("partition parts must be >= 1");
            if (i > 0 && parts[i] > parts[i - 1])
                throw std::invalid_argument("partition parts must be non-increasing");
        }
    }

    friend bool operator==(const Partition &a, const Partition &b) { return a.parts == b.parts; }
    friend auto operator<=>(const Partition &a, const Partition &b) { return a.parts <=> b.parts; }
};

// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
inline std::vector<Partition> partitions_of(long n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
    std::vector<Partition> out;
    std::vector<long> cur;
    auto rec = [&](auto &&self, long rest, long maxpart) -> void {
        if (rest == 0) {
            out.push_back({cur});
            return;
        }
        for (long p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

struct PartitionStats {
    long n_lambda = 0;            // sum (i-1) lambda_i
    std::map<long, long> mult;    // m_i(lambda), nonzero entries only
    long pairing = 0;             // <lambda,lambda> = |lambda| + 2 n(lambda)
};

inline PartitionStats stats(const Partition &lam) {
    lam.validate();
    PartitionStats s;
    for (std::size_t i = 0; i < lam.parts.size(); ++i) {
        s.n_lambda += static_cast<long>(i) * lam.parts[i];
        ++s.mult[lam.parts[i]];
    }
    s.pairing = lam.size() + 2 * s.n_lambda;
    return s;
}

// phi_m(q) = (1-q)(1-q^2)...(1-q^m)
inline QPoly phi(long m) {
    if (m < 0) throw std::invalid_argument("phi: m must be >= 0");
    QPoly r{{0, 1}};
    for (long i = 1; i <= m; ++i) r = qpoly_mul(r, QPoly{{0, 1}, {i, -1}});
    return r;
}

// b_lambda(q) = prod_i phi_{m_i(lambda)}(q)
inline QPoly b_lambda(const Partition &lam) {
    QPoly r{{0, 1}};
    for (const auto &[i, m] : stats(lam).mult) r = qpoly_mul(r, phi(m));
    return r;
}

// a_lambda(q) = q^{<l,l>} b_lambda(q^{-1}); a polynomial in q, equal to the
// centralizer order in GL_{|lambda|}(F_q) of a unipotent of Jordan type lambda.
inline QPoly a_lambda(const Partition &lam) {
    const long pairing = stats(lam).pairing;
    QPoly r;
    for (const auto &[e, c] : qpoly_subst_pow(b_lambda(lam), -1)) {
        long exp = e + pairing;
        if (exp < 0)
            throw std::logic_error("a_lambda: negative exponent survived the q^{<l,l>} prefactor");
        if (!is_integer(c)) throw std::logic_error("a_lambda: non-integer coefficient");
        r[exp] = c;
    }
    return r;
}

inline Rat a_lambda_at(const Partition &lam, const Rat &q) { return qpoly_eval(a_lambda(lam), q); }

} // namespace cozeta
