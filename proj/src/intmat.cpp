#include "k3ff/intmat.hpp"

namespace k3ff {

ZMat zmat(size_t r, size_t c) { return ZMat(r, ZVec(c, 0)); }

ZMat zidentity(size_t n) {
    ZMat m = zmat(n, n);
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

ZMat ztranspose(const ZMat& m) {
    ZMat t = zmat(cols(m), rows(m));
    for (size_t i = 0; i < rows(m); ++i)
        for (size_t j = 0; j < cols(m); ++j) t[j][i] = m[i][j];
    return t;
}

ZMat zmul(const ZMat& a, const ZMat& b) {
    if (cols(a) != rows(b)) throw std::invalid_argument("zmul shape mismatch");
    ZMat r = zmat(rows(a), cols(b));
    for (size_t i = 0; i < rows(a); ++i)
        for (size_t k = 0; k < cols(a); ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < cols(b); ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

ZVec zmulv(const ZMat& a, const ZVec& v) {
    if (cols(a) != v.size()) throw std::invalid_argument("zmulv shape mismatch");
    ZVec r(rows(a), 0);
    for (size_t i = 0; i < rows(a); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    return r;
}

mpz_class zdot(const ZVec& a, const ZVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("zdot size mismatch");
    mpz_class s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

QMat qmat(size_t r, size_t c) { return QMat(r, QVec(c, 0)); }

QMat to_q(const ZMat& m) {
    QMat q = qmat(rows(m), cols(m));
    for (size_t i = 0; i < rows(m); ++i)
        for (size_t j = 0; j < cols(m); ++j) q[i][j] = m[i][j];
    return q;
}

QMat qmul(const QMat& a, const QMat& b) {
    QMat r = qmat(a.size(), b.empty() ? 0 : b[0].size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < b[k].size(); ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

QMat qtranspose(const QMat& m) {
    QMat t = qmat(m.empty() ? 0 : m[0].size(), m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

mpq_class qdet(QMat m) {
    size_t n = m.size();
    if (n == 0) return 1;
    mpq_class det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        mpq_class inv = 1 / m[col][col];
        for (size_t i = col + 1; i < n; ++i) {
            if (m[i][col] == 0) continue;
            mpq_class f = m[i][col] * inv;
            for (size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    return det;
}

mpz_class zdet(const ZMat& m) {
    mpq_class d = qdet(to_q(m));
    if (d.get_den() != 1) throw std::logic_error("integer determinant came out fractional");
    return d.get_num();
}

ZMat hnf(const ZMat& a, ZMat* u_out, size_t* rank_out) {
    ZMat h = a;
    size_t r = rows(a), c = cols(a);
    ZMat u = zidentity(r);
    size_t p = 0;
    for (size_t j = 0; j < c && p < r; ++j) {
        // Euclid on column j among rows p..r-1
        for (;;) {
            size_t best = r;
            for (size_t i = p; i < r; ++i)
                if (h[i][j] != 0 && (best == r || abs(h[i][j]) < abs(h[best][j]))) best = i;
            if (best == r) break;
            std::swap(h[best], h[p]);
            std::swap(u[best], u[p]);
            bool more = false;
            for (size_t i = p + 1; i < r; ++i) {
                if (h[i][j] == 0) continue;
                mpz_class q = h[i][j] / h[p][j];  // truncated division is fine for Euclid
                if (q != 0) {
                    for (size_t k = 0; k < c; ++k) h[i][k] -= q * h[p][k];
                    for (size_t k = 0; k < r; ++k) u[i][k] -= q * u[p][k];
                }
                if (h[i][j] != 0) more = true;
            }
            if (!more) break;
        }
        if (h[p][j] == 0) continue;
        if (h[p][j] < 0) {
            for (size_t k = 0; k < c; ++k) h[p][k] = -h[p][k];
            for (size_t k = 0; k < r; ++k) u[p][k] = -u[p][k];
        }
        // reduce entries above the pivot into [0, pivot)
        for (size_t i = 0; i < p; ++i) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), h[i][j].get_mpz_t(), h[p][j].get_mpz_t());
            if (q != 0) {
                for (size_t k = 0; k < c; ++k) h[i][k] -= q * h[p][k];
                for (size_t k = 0; k < r; ++k) u[i][k] -= q * u[p][k];
            }
        }
        ++p;
    }
    if (u_out) *u_out = u;
    if (rank_out) *rank_out = p;
    return h;
}

ZMat left_kernel(const ZMat& a) {
    ZMat u;
    size_t rank = 0;
    hnf(a, &u, &rank);
    ZMat k;
    for (size_t i = rank; i < rows(a); ++i) k.push_back(u[i]);
    return k;
}

ZVec snf(const ZMat& a, ZMat* u_out, ZMat* v_out) {
    ZMat d = a;
    size_t r = rows(a), c = cols(a);
    ZMat u = zidentity(r), v = zidentity(c);
    size_t n = std::min(r, c);
    auto finish = [&]() {
        ZVec diag;
        for (size_t i = 0; i < n; ++i) {
            if (d[i][i] < 0) {
                for (auto& x : d[i]) x = -x;
                for (auto& x : u[i]) x = -x;
            }
            diag.push_back(d[i][i]);
        }
        if (u_out) *u_out = u;
        if (v_out) *v_out = v;
        return diag;
    };
    for (size_t p = 0; p < n; ++p) {
        for (;;) {
            // find the minimal nonzero entry in the remaining block
            size_t bi = r, bj = c;
            for (size_t i = p; i < r; ++i)
                for (size_t j = p; j < c; ++j)
                    if (d[i][j] != 0 && (bi == r || abs(d[i][j]) < abs(d[bi][bj]))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == r) return finish();
            std::swap(d[bi], d[p]);
            std::swap(u[bi], u[p]);
            if (bj != p)
                for (size_t i = 0; i < r; ++i) std::swap(d[i][bj], d[i][p]);
            if (bj != p)
                for (size_t i = 0; i < c; ++i) std::swap(v[i][bj], v[i][p]);
            bool clean = true;
            for (size_t i = p + 1; i < r; ++i) {
                mpz_class q = d[i][p] / d[p][p];
                if (q != 0)
                    for (size_t k = 0; k < c; ++k) d[i][k] -= q * d[p][k];
                if (q != 0)
                    for (size_t k = 0; k < r; ++k) u[i][k] -= q * u[p][k];
                if (d[i][p] != 0) clean = false;
            }
            for (size_t j = p + 1; j < c; ++j) {
                mpz_class q = d[p][j] / d[p][p];
                if (q != 0)
                    for (size_t k = 0; k < r; ++k) d[k][j] -= q * d[k][p];
                if (q != 0)
                    for (size_t k = 0; k < c; ++k) v[k][j] -= q * v[k][p];
                if (d[p][j] != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility fix-up: d[p][p] must divide every later entry
            bool fixed = true;
            for (size_t i = p + 1; i < r && fixed; ++i)
                for (size_t j = p + 1; j < c && fixed; ++j)
                    if (d[i][j] % d[p][p] != 0) {
                        for (size_t k = 0; k < c; ++k) d[p][k] += d[i][k];
                        for (size_t k = 0; k < r; ++k) u[p][k] += u[i][k];
                        fixed = false;
                    }
            if (fixed) break;
        }
    }
    return finish();
}

bool solve_left(const QMat& a, const QVec& b, QVec& x) {
    // x * A = b  <=>  A^T x^T = b^T
    size_t r = a.size(), c = a.empty() ? 0 : a[0].size();
    if (b.size() != c) throw std::invalid_argument("solve_left shape mismatch");
    QMat m = qmat(c, r + 1);
    for (size_t i = 0; i < c; ++i) {
        for (size_t j = 0; j < r; ++j) m[i][j] = a[j][i];
        m[i][r] = b[i];
    }
    size_t p = 0;
    std::vector<size_t> pivot_col;
    for (size_t j = 0; j < r && p < c; ++j) {
        size_t piv = p;
        while (piv < c && m[piv][j] == 0) ++piv;
        if (piv == c) continue;
        std::swap(m[piv], m[p]);
        mpq_class inv = 1 / m[p][j];
        for (size_t k = j; k <= r; ++k) m[p][k] *= inv;
        for (size_t i = 0; i < c; ++i) {
            if (i == p || m[i][j] == 0) continue;
            mpq_class f = m[i][j];
            for (size_t k = j; k <= r; ++k) m[i][k] -= f * m[p][k];
        }
        pivot_col.push_back(j);
        ++p;
    }
    for (size_t i = p; i < c; ++i)
        if (m[i][r] != 0) return false;
    x.assign(r, 0);
    for (size_t i = 0; i < p; ++i) x[pivot_col[i]] = m[i][r];
    return true;
}

ZMat saturate_rows(const ZMat& a) {
    size_t n = cols(a);
    ZMat right_ker = left_kernel(ztranspose(a));
    if (right_ker.empty()) return zidentity(n);
    return left_kernel(ztranspose(right_ker));
}

ZMat clear_denominators(const QMat& m, mpz_class& lcm_out) {
    mpz_class l = 1;
    for (const auto& row : m)
        for (const auto& e : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den().get_mpz_t());
    ZMat z = zmat(m.size(), m.empty() ? 0 : m[0].size());
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) {
            mpq_class v = m[i][j] * l;
            z[i][j] = v.get_num();
        }
    lcm_out = l;
    return z;
}

}  // namespace k3ff
