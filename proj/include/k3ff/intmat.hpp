#pragma once

// Exact integer and rational matrices used for lattice work: Hermite and
// Smith normal forms with transformation matrices, kernels, determinants
// and linear solving.  Sizes here are tiny (rank at most 26), so simple
// cubic algorithms over mpz/mpq are plenty.

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

namespace k3ff {

using ZMat = std::vector<std::vector<mpz_class>>;
using QMat = std::vector<std::vector<mpq_class>>;
using ZVec = std::vector<mpz_class>;
using QVec = std::vector<mpq_class>;

// mpq_class(n, d) stores the pair unreduced; this always canonicalizes
inline mpq_class frac(long n, long d) {
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

inline size_t rows(const ZMat& m) { return m.size(); }
inline size_t cols(const ZMat& m) { return m.empty() ? 0 : m[0].size(); }

ZMat zmat(size_t r, size_t c);
ZMat zidentity(size_t n);
ZMat ztranspose(const ZMat& m);
ZMat zmul(const ZMat& a, const ZMat& b);
ZVec zmulv(const ZMat& a, const ZVec& v);
mpz_class zdot(const ZVec& a, const ZVec& b);

QMat qmat(size_t r, size_t c);
QMat to_q(const ZMat& m);
QMat qmul(const QMat& a, const QMat& b);
QMat qtranspose(const QMat& m);

mpz_class zdet(const ZMat& m);
mpq_class qdet(QMat m);

// Row-style Hermite normal form: returns H with H = U * A for unimodular U.
// Zero rows are moved to the bottom.  rank receives the number of nonzero
// rows of H.
ZMat hnf(const ZMat& a, ZMat* u = nullptr, size_t* rank = nullptr);

// Basis (as rows) of the integer kernel {x : x * A = 0}.
ZMat left_kernel(const ZMat& a);

// Smith normal form: D = U * A * V diagonal with d1 | d2 | ... ; returns the
// diagonal entries (nonnegative, zeros last).
ZVec snf(const ZMat& a, ZMat* u = nullptr, ZMat* v = nullptr);

// Solve x * A = b over Q; returns false when inconsistent.
bool solve_left(const QMat& a, const QVec& b, QVec& x);

// Saturation of the row span of A inside Z^n: a basis of (rowspace_Q A) cap Z^n.
ZMat saturate_rows(const ZMat& a);

ZMat clear_denominators(const QMat& m, mpz_class& lcm_out);

}  // namespace k3ff
