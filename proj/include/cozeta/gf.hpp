#pragma once

// Small finite fields F_q, q = p^e <= 9, as dense arithmetic tables.
// Elements are indices 0..q-1; for e > 1 the index is the base-p encoding of
// a polynomial over F_p reduced modulo a supplied irreducible.

#include <cstdint>
#include <vector>

#include "rational.hpp"

namespace cozeta {

struct FieldSpec {
    long p = 2;
    long e = 1;
    std::vector<long> modulus; // monic irreducible, coefficients low to high, size e+1; empty for e=1
    long q_bound = 9;

    long q() const {
        long r = 1;
        for (long i = 0; i < e; ++i) r *= p;
        return r;
    }
};

inline bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Shipped defaults for the non-prime q the oracle supports.
inline std::vector<long> default_irreducible(long p, long e) {
    if (p == 2 && e == 2) return {1, 1, 1};    // x^2+x+1
    if (p == 2 && e == 3) return {1, 1, 0, 1}; // x^3+x+1
    if (p == 3 && e == 2) return {1, 0, 1};    // x^2+1
    throw std::invalid_argument("no default irreducible polynomial for p^e = " +
                                std::to_string(p) + "^" + std::to_string(e));
}

class Field {
  public:
    explicit Field(FieldSpec spec) : spec_(std::move(spec)) {
        if (!is_prime(spec_.p)) throw std::invalid_argument("field characteristic must be prime");
        if (spec_.e < 1) throw std::invalid_argument("extension degree must be >= 1");
        q_ = spec_.q();
        if (q_ > spec_.q_bound)
            throw budget_error("field size " + std::to_string(q_) + " exceeds bound " +
                               std::to_string(spec_.q_bound));
        if (spec_.e > 1 && spec_.modulus.empty())
            spec_.modulus = default_irreducible(spec_.p, spec_.e);
        build_tables();
    }

    static Field of_order(long q, long q_bound = 9) {
        for (long p = 2; p <= q; ++p) {
            if (!is_prime(p) || q % p) continue;
            long e = 0, m = q;
            while (m > 1 && m % p == 0) { m /= p; ++e; }
            if (m != 1) break;
            return Field(FieldSpec{p, e, {}, q_bound});
        }
        throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    }

    long q() const { return q_; }
    long p() const { return spec_.p; }

    uint8_t add(uint8_t a, uint8_t b) const { return add_[a * q_ + b]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add_[a * q_ + neg_[b]]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * q_ + b]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }
    uint8_t inv(uint8_t a) const {
        if (a == 0) throw std::domain_error("inverse of 0 in a field");
        return inv_[a];
    }

  private:
    FieldSpec spec_;
    long q_ = 0;
    std::vector<uint8_t> add_, mul_, neg_, inv_;

    // polynomial representation of index x: digits base p
    std::vector<long> digits(long x) const {
        std::vector<long> d(spec_.e, 0);
        for (long i = 0; i < spec_.e; ++i) { d[i] = x % spec_.p; x /= spec_.p; }
        return d;
    }
    long index(const std::vector<long> &d) const {
        long x = 0;
        for (long i = spec_.e - 1; i >= 0; --i) x = x * spec_.p + d[i];
        return x;
    }

    void build_tables() {
        const long p = spec_.p, e = spec_.e;
        add_.assign(q_ * q_, 0);
        mul_.assign(q_ * q_, 0);
        neg_.assign(q_, 0);
        inv_.assign(q_, 0);
        for (long a = 0; a < q_; ++a) {
            auto da = digits(a);
            for (long i = 0; i < e; ++i) da[i] = (p - da[i]) % p;
            neg_[a] = static_cast<uint8_t>(index(da));
        }
        for (long a = 0; a < q_; ++a)
            for (long b = 0; b < q_; ++b) {
                auto da = digits(a), db = digits(b);
                std::vector<long> s(e);
                for (long i = 0; i < e; ++i) s[i] = (da[i] + db[i]) % p;
                add_[a * q_ + b] = static_cast<uint8_t>(index(s));

                std::vector<long> prod(2 * e - 1, 0);
                for (long i = 0; i < e; ++i)
                    for (long j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                // reduce modulo the monic irreducible
                for (long i = 2 * e - 2; i >= e; --i) {
                    long c = prod[i];
                    if (c == 0) continue;
                    prod[i] = 0;
                    for (long j = 0; j < e; ++j)
                        prod[i - e + j] = ((prod[i - e + j] - c * spec_.modulus[j]) % p + p * p) % p;
                }
                prod.resize(e);
                mul_[a * q_ + b] = static_cast<uint8_t>(index(prod));
            }
        // exhaustive inverse search; doubles as an irreducibility check
        for (long a = 1; a < q_; ++a) {
            bool found = false;
            for (long b = 1; b < q_; ++b)
                if (mul_[a * q_ + b] == 1) { inv_[a] = static_cast<uint8_t>(b); found = true; break; }
            if (!found)
                throw std::invalid_argument("supplied polynomial is reducible: " +
                                            std::to_string(a) + " has no inverse");
        }
    }
};

} // namespace cozeta
