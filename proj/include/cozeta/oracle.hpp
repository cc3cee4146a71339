#pragma once

// Brute-force ground truth over small finite fields: centralizer dimensions,
// conjugacy class counts (Burnside via commutant algebras), unipotent counts
// and commuting-pair counts.  Everything is exhaustive enumeration in
// row-major base-q order.

#include <vector>

#include "gf.hpp"

namespace cozeta {

struct OracleBudget {
    long max_dim = 4;                        // matrix dimension bound
    Int max_enumeration = Int(1) << 22;      // max number of matrices to scan
};

struct MatrixOverGF {
    long n = 0;
    std::vector<uint8_t> a; // row-major, size n*n

    uint8_t &at(long i, long j) { return a[i * n + j]; }
    uint8_t at(long i, long j) const { return a[i * n + j]; }

    static MatrixOverGF zero(long n) { return {n, std::vector<uint8_t>(n * n, 0)}; }
    static MatrixOverGF identity(long n) {
        MatrixOverGF m = zero(n);
        for (long i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    // index in the row-major base-q enumeration
    static MatrixOverGF from_index(long n, Int idx, long q) {
        MatrixOverGF m = zero(n);
        for (long k = n * n - 1; k >= 0; --k) {
            m.a[k] = static_cast<uint8_t>((idx % q).convert_to<long>());
            idx /= q;
        }
        return m;
    }

    bool is_scalar() const {
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j)
                if (at(i, j) != (i == j ? at(0, 0) : 0)) return false;
        return true;
    }
};

inline MatrixOverGF mat_mul(const Field &F, const MatrixOverGF &x, const MatrixOverGF &y) {
    MatrixOverGF r = MatrixOverGF::zero(x.n);
    for (long i = 0; i < x.n; ++i)
        for (long k = 0; k < x.n; ++k) {
            uint8_t v = x.at(i, k);
            if (!v) continue;
            for (long j = 0; j < x.n; ++j)
                r.at(i, j) = F.add(r.at(i, j), F.mul(v, y.at(k, j)));
        }
    return r;
}

inline MatrixOverGF mat_sub(const Field &F, const MatrixOverGF &x, const MatrixOverGF &y) {
    MatrixOverGF r = x;
    for (long k = 0; k < x.n * x.n; ++k) r.a[k] = F.sub(x.a[k], y.a[k]);
    return r;
}

inline bool mat_is_zero(const MatrixOverGF &x) {
    for (uint8_t v : x.a)
        if (v) return false;
    return true;
}

// Row echelon rank of an r x c matrix given as rows over F.
inline long gf_rank(const Field &F, std::vector<std::vector<uint8_t>> rows, long cols) {
    long rank = 0;
    for (long col = 0; col < cols && rank < static_cast<long>(rows.size()); ++col) {
        long piv = -1;
        for (long i = rank; i < static_cast<long>(rows.size()); ++i)
            if (rows[i][col]) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        uint8_t inv = F.inv(rows[rank][col]);
        for (long j = col; j < cols; ++j) rows[rank][j] = F.mul(rows[rank][j], inv);
        for (long i = 0; i < static_cast<long>(rows.size()); ++i) {
            if (i == rank || !rows[i][col]) continue;
            uint8_t f = rows[i][col];
            for (long j = col; j < cols; ++j)
                rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[rank][j]));
        }
        ++rank;
    }
    return rank;
}

inline bool mat_invertible(const Field &F, const MatrixOverGF &m) {
    std::vector<std::vector<uint8_t>> rows(m.n, std::vector<uint8_t>(m.n));
    for (long i = 0; i < m.n; ++i)
        for (long j = 0; j < m.n; ++j) rows[i][j] = m.at(i, j);
    return gf_rank(F, std::move(rows), m.n) == m.n;
}

// Nullspace basis of the commutator map B -> AB - BA on the n^2-dimensional
// space of matrices; returned as matrices.
inline std::vector<MatrixOverGF> commutant_basis(const Field &F, const MatrixOverGF &A) {
    const long n = A.n, N = n * n;
    // rows of the N x N matrix of the linear map, columns indexed by B entries
    std::vector<std::vector<uint8_t>> M(N, std::vector<uint8_t>(N, 0));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            long r = i * n + j;
            for (long k = 0; k < n; ++k) {
                // (AB)_{ij} = sum_k A_{ik} B_{kj}
                M[r][k * n + j] = F.add(M[r][k * n + j], A.at(i, k));
                // -(BA)_{ij} = -sum_k B_{ik} A_{kj}
                M[r][i * n + k] = F.sub(M[r][i * n + k], A.at(k, j));
            }
        }
    // reduced row echelon, then read off free columns
    long rank = 0;
    std::vector<long> pivot_col;
    for (long col = 0; col < N && rank < N; ++col) {
        long piv = -1;
        for (long i = rank; i < N; ++i)
            if (M[i][col]) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(M[rank], M[piv]);
        uint8_t inv = F.inv(M[rank][col]);
        for (long j = col; j < N; ++j) M[rank][j] = F.mul(M[rank][j], inv);
        for (long i = 0; i < N; ++i) {
            if (i == rank || !M[i][col]) continue;
            uint8_t f = M[i][col];
            for (long j = col; j < N; ++j) M[i][j] = F.sub(M[i][j], F.mul(f, M[rank][j]));
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<MatrixOverGF> basis;
    std::vector<bool> is_pivot(N, false);
    for (long c : pivot_col) is_pivot[c] = true;
    for (long free = 0; free < N; ++free) {
        if (is_pivot[free]) continue;
        MatrixOverGF B = MatrixOverGF::zero(n);
        B.a[free] = 1;
        for (long r = 0; r < rank; ++r)
            if (M[r][free]) B.a[pivot_col[r]] = F.neg(M[r][free]);
        basis.push_back(std::move(B));
    }
    return basis;
}

inline long commutant_dim(const Field &F, const MatrixOverGF &A) {
    return static_cast<long>(commutant_basis(F, A).size());
}

namespace detail {

inline void check_budget(long n, long q, const OracleBudget &budget) {
    if (n > budget.max_dim)
        throw budget_error("matrix dimension " + std::to_string(n) + " exceeds budget bound " +
                           std::to_string(budget.max_dim));
    Int total = int_pow(Int(q), n * n);
    if (total > budget.max_enumeration)
        throw budget_error("enumeration of q^(n^2) = " + total.str() + " matrices exceeds budget");
}

// Enumerate the commutant algebra of A (q^dim elements) and count invertibles.
inline Int count_invertible_in_commutant(const Field &F, const MatrixOverGF &A,
                                         const OracleBudget &budget) {
    auto basis = commutant_basis(F, A);
    Int combos = int_pow(Int(F.q()), static_cast<long>(basis.size()));
    if (combos > budget.max_enumeration)
        throw budget_error("commutant enumeration " + combos.str() + " exceeds budget");
    long count = 0;
    long total = combos.convert_to<long>();
    for (long idx = 0; idx < total; ++idx) {
        MatrixOverGF B = MatrixOverGF::zero(A.n);
        long rest = idx;
        for (const auto &E : basis) {
            long c = rest % F.q();
            rest /= F.q();
            if (!c)
                continue;
            for (long k = 0; k < A.n * A.n; ++k)
                B.a[k] = F.add(B.a[k], F.mul(static_cast<uint8_t>(c), E.a[k]));
        }
        if (mat_invertible(F, B)) ++count;
    }
    return Int(count);
}

} // namespace detail

// |GL_n(F_q)| by formula; used for scalar short-circuits and cross-checks.
inline Int gl_order_oracle(long n, long q) {
    Int r = 1, qn = int_pow(Int(q), n);
    for (long k = 0; k < n; ++k) r *= qn - int_pow(Int(q), k);
    return r;
}

// #{A in GL_n : (A-I)^n = 0}
inline Int count_unipotent(long n, const Field &F, const OracleBudget &budget = {}) {
    detail::check_budget(n, F.q(), budget);
    const Int total = int_pow(Int(F.q()), n * n);
    const MatrixOverGF I = MatrixOverGF::identity(n);
    Int count = 0;
    for (Int idx = 0; idx < total; ++idx) {
        MatrixOverGF A = MatrixOverGF::from_index(n, idx, F.q());
        MatrixOverGF N = mat_sub(F, A, I);
        MatrixOverGF P = N;
        for (long k = 1; k < n; ++k) P = mat_mul(F, P, N);
        if (!mat_is_zero(P)) continue;
        if (mat_invertible(F, A)) ++count; // unipotent implies invertible; kept as a sanity filter
    }
    return count;
}

// Burnside: #classes of GL_n = (1/|G|) sum_{g in G} #{h in G : gh = hg}
inline Int count_classes_gl(long n, const Field &F, const OracleBudget &budget = {}) {
    detail::check_budget(n, F.q(), budget);
    const Int total = int_pow(Int(F.q()), n * n);
    const Int order = gl_order_oracle(n, F.q());
    Int sum = 0;
    for (Int idx = 0; idx < total; ++idx) {
        MatrixOverGF g = MatrixOverGF::from_index(n, idx, F.q());
        if (!mat_invertible(F, g)) continue;
        if (g.is_scalar()) {
            sum += order;
            continue;
        }
        sum += detail::count_invertible_in_commutant(F, g, budget);
    }
    if (sum % order != 0) throw std::logic_error("Burnside sum not divisible by |G|");
    return sum / order;
}

// #classes of M_n under GL_n-conjugation: fixed points of conjugation by g
// form the linear space of matrices commuting with g, q^{commutant_dim(g)}.
inline Int count_classes_mn(long n, const Field &F, const OracleBudget &budget = {}) {
    detail::check_budget(n, F.q(), budget);
    const Int total = int_pow(Int(F.q()), n * n);
    const Int order = gl_order_oracle(n, F.q());
    Int sum = 0;
    for (Int idx = 0; idx < total; ++idx) {
        MatrixOverGF g = MatrixOverGF::from_index(n, idx, F.q());
        if (!mat_invertible(F, g)) continue;
        sum += int_pow(Int(F.q()), commutant_dim(F, g));
    }
    if (sum % order != 0) throw std::logic_error("Burnside sum not divisible by |G|");
    return sum / order;
}

// gamma_n = #{(A,B) in M_n x M_n : AB = BA} = sum_A q^{commutant_dim(A)}
inline Int gamma(long n, const Field &F, const OracleBudget &budget = {}) {
    detail::check_budget(n, F.q(), budget);
    const Int total = int_pow(Int(F.q()), n * n);
    Int sum = 0;
    for (Int idx = 0; idx < total; ++idx) {
        MatrixOverGF A = MatrixOverGF::from_index(n, idx, F.q());
        sum += int_pow(Int(F.q()), commutant_dim(F, A));
    }
    return sum;
}

// gamma'_n, restricted to invertible A; asserts the Burnside identity
// gamma'_n = |G_n| * #classes(M_n).
inline Int gamma_prime(long n, const Field &F, const OracleBudget &budget = {}) {
    detail::check_budget(n, F.q(), budget);
    const Int total = int_pow(Int(F.q()), n * n);
    Int sum = 0;
    for (Int idx = 0; idx < total; ++idx) {
        MatrixOverGF A = MatrixOverGF::from_index(n, idx, F.q());
        if (!mat_invertible(F, A)) continue;
        sum += int_pow(Int(F.q()), commutant_dim(F, A));
    }
    if (sum != gl_order_oracle(n, F.q()) * count_classes_mn(n, F, budget))
        throw std::logic_error("gamma_prime: Burnside identity failed");
    return sum;
}

// #{h in GL_n : hA = Ah} for invertible A
inline Int centralizer_order_gl(const Field &F, const MatrixOverGF &A,
                                const OracleBudget &budget = {}) {
    if (!mat_invertible(F, A)) throw std::invalid_argument("centralizer_order_gl: A not invertible");
    if (A.is_scalar()) return gl_order_oracle(A.n, F.q());
    return detail::count_invertible_in_commutant(F, A, budget);
}

} // namespace cozeta
