#include "k3ff/isometry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace k3ff {

namespace {

// squarefree integer representative of the square class of a nonzero rational
mpz_class square_class(const mpq_class& q) {
    mpz_class n = q.get_num() * q.get_den();
    mpz_class out = n < 0 ? -1 : 1;
    mpz_class m = abs(n);
    for (mpz_class p = 2; p * p <= m; ++p) {
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e % 2) out *= p;
    }
    out *= m;
    return out;
}

// valuation and unit part at p
int strip(mpz_class& u, const mpz_class& p) {
    int v = 0;
    while (u % p == 0) {
        u /= p;
        ++v;
    }
    return v;
}

int legendre(const mpz_class& a, const mpz_class& p) {
    mpz_class r;
    mpz_class e = (p - 1) / 2;
    mpz_powm(r.get_mpz_t(), mpz_class(((a % p) + p) % p).get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    if (r == 0) throw std::domain_error("legendre symbol of multiple of p");
    return r == 1 ? 1 : -1;
}

}  // namespace

int hilbert_symbol(const mpq_class& a_in, const mpq_class& b_in, const mpz_class& p) {
    if (a_in == 0 || b_in == 0) throw std::domain_error("hilbert symbol needs nonzero arguments");
    mpz_class a = square_class(a_in), b = square_class(b_in);
    if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
    mpz_class u = abs(a), v = abs(b);
    int sa = a < 0 ? -1 : 1, sb = b < 0 ? -1 : 1;
    int alpha = strip(u, p), beta = strip(v, p);
    mpz_class us = sa * u, vs = sb * v;  // unit parts with sign
    if (p == 2) {
        auto eps = [](const mpz_class& x) -> mpz_class { return (((x - 1) / 2) % 2 + 2) % 2; };
        auto omega = [](const mpz_class& x) -> mpz_class { return (((x * x - 1) / 8) % 2 + 2) % 2; };
        mpz_class e = eps(us) * eps(vs) + mpz_class(alpha) * omega(vs) + mpz_class(beta) * omega(us);
        return e % 2 == 0 ? 1 : -1;
    }
    int sym = 1;
    if (beta % 2) sym *= legendre(us, p);
    if (alpha % 2) sym *= legendre(vs, p);
    if ((alpha % 2) && (beta % 2) && ((p - 1) / 2) % 2 == 1) sym = -sym;
    return sym;
}

QVec diagonalize_form(QMat m) {
    size_t n = m.size();
    QVec diag;
    for (size_t k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            size_t j = k + 1;
            while (j < n && m[j][j] == 0) ++j;
            if (j < n) {
                std::swap(m[k], m[j]);
                for (auto& row : m) std::swap(row[k], row[j]);
            } else {
                // all remaining diagonal entries vanish; use an off-diagonal
                size_t a = n, b = n;
                for (size_t i = k; i < n && a == n; ++i)
                    for (size_t l = i + 1; l < n; ++l)
                        if (m[i][l] != 0) {
                            a = i;
                            b = l;
                            break;
                        }
                if (a == n) throw std::domain_error("degenerate quadratic form");
                for (size_t c = 0; c < n; ++c) m[a][c] += m[b][c];
                for (size_t r = 0; r < n; ++r) m[r][a] += m[r][b];
                if (a != k) {
                    std::swap(m[k], m[a]);
                    for (auto& row : m) std::swap(row[k], row[a]);
                }
            }
        }
        mpq_class piv = m[k][k];
        diag.push_back(piv);
        for (size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            mpq_class f = m[i][k] / piv;
            for (size_t c = 0; c < n; ++c) m[i][c] -= f * m[k][c];
            for (size_t r = 0; r < n; ++r) m[r][i] -= f * m[r][k];
        }
    }
    return diag;
}

FormInvariants form_invariants(const QMat& gram) {
    QVec d = diagonalize_form(gram);
    FormInvariants inv;
    inv.rank = static_cast<int>(d.size());
    mpq_class det = 1;
    for (const auto& a : d) {
        det *= a;
        if (a > 0) ++inv.positives;
    }
    inv.det_class = square_class(det);
    // candidate primes: 2 plus odd primes dividing some diagonal square class
    std::set<mpz_class> primes = {2};
    for (const auto& a : d) {
        mpz_class sc = abs(square_class(a));
        for (mpz_class p = 3; p * p <= sc; p += 2)
            if (sc % p == 0) {
                primes.insert(p);
                while (sc % p == 0) sc /= p;
            }
        if (sc > 2) primes.insert(sc);
    }
    for (const auto& p : primes) {
        int h = 1;
        for (size_t i = 0; i < d.size(); ++i)
            for (size_t j = i + 1; j < d.size(); ++j) h *= hilbert_symbol(d[i], d[j], p);
        if (h == -1) inv.hasse.push_back({p, h});
    }
    return inv;
}

bool rationally_equivalent(const QMat& a, const QMat& b) {
    FormInvariants ia = form_invariants(a), ib = form_invariants(b);
    return ia.rank == ib.rank && ia.positives == ib.positives && ia.det_class == ib.det_class &&
           ia.hasse == ib.hasse;
}

bool isometry_witness_ok(const QMat& a, const QMat& b, const QMat& m) {
    // witness maps the basis of the form b into the form a: M^t A M == B
    return qmul(qmul(qtranspose(m), a), m) == b;
}

BsvResult bsv_self_isogeny_test(const ZMat& t) {
    BsvResult r;
    size_t n = rows(t);
    if (n % 2 != 0) {
        r.self_isogeny_possible = false;
        r.reason = "transcendental rank is odd";
        return r;
    }
    mpz_class det = abs(zdet(t));
    if (det == 0) throw std::domain_error("degenerate transcendental lattice");
    mpz_class m = det;
    for (mpz_class p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        int v = strip(m, p);
        mpz_class pm8 = p % 8;
        if ((pm8 == 3 || pm8 == 5) && v % 2 == 1) {
            r.self_isogeny_possible = false;
            r.reason = "v_" + p.get_str() + "(det) = " + std::to_string(v) + " is odd with " + p.get_str() +
                       " = " + pm8.get_str() + " mod 8";
            return r;
        }
    }
    if (m > 1) {
        mpz_class pm8 = m % 8;
        if (pm8 == 3 || pm8 == 5) {
            r.self_isogeny_possible = false;
            r.reason = "v_" + m.get_str() + "(det) = 1 is odd with " + m.get_str() + " = " + pm8.get_str() +
                       " mod 8";
            return r;
        }
    }
    r.self_isogeny_possible = true;
    r.reason = "even rank and v_q(det) even for all q = 3,5 mod 8";
    return r;
}

}  // namespace k3ff
