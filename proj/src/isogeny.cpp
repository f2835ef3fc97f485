#include "k3ff/isogeny.hpp"

#include <stdexcept>

namespace k3ff {

std::pair<KT, KT> kummer_invariants(const KT& a, const KT& b) {
    if (b.is_zero()) throw std::invalid_argument("kummer_invariants: b must be nonzero");
    KT a2 = a * a, b2 = b * b;
    KT u = a2 - kt(3) + kt(12) * b2;
    KT v = kt(2) * a2 - kt(9) - kt(72) * b2;
    return {kt(4096) * u * u * u / b2, kt(1024) * a2 * v * v / b2};
}

std::pair<KT, KT> remark43_invariants(const KT& k) {
    KT u = kt(256) * k * k - kt(16) * k - kt(767);
    KT v = kt(32) * k - kt(1);
    KT w = kt(128) * k * k - kt(8) * k - kt(577);
    return {u * u * u, v * v * w * w};
}

KT legendre_j(const KT& l) {
    if (l.is_zero() || l == kt(1))
        throw std::invalid_argument("legendre_j: parameter must avoid 0 and 1");
    KT n = kt(1) - l + l * l;
    KT d = l * l * (l - kt(1)) * (l - kt(1));
    return kt(256) * n * n * n / d;
}

std::vector<KT> legendre_orbit(const KT& l) {
    if (l.is_zero() || l == kt(1))
        throw std::invalid_argument("legendre_orbit: parameter must avoid 0 and 1");
    KT one = kt(1);
    return {l, one / l, one - l, (l - one) / l, one / (one - l), l / (l - one)};
}

namespace {

// disc = f^2 * core with core squarefree (sign carried by core).
void squarefree_core(const mpz_class& disc, mpz_class& f, std::int64_t& core) {
    mpz_class n = abs(disc);
    f = 1;
    mpz_class c = 1;
    for (mpz_class p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        for (unsigned i = 0; i + 1 < e; i += 2) f *= p;
        if (e % 2) c *= p;
    }
    c *= n;
    if (disc < 0) c = -c;
    if (!c.fits_slong_p()) throw std::overflow_error("squarefree core too large");
    core = c.get_si();
}

}  // namespace

CMData shioda_inose_cm(const TranscendentalLattice2x2& T) {
    mpz_class disc = T.b * T.b - 4 * T.a * T.c;
    if (disc >= 0) throw std::invalid_argument("shioda_inose_cm: lattice must be definite");
    mpz_class f;
    std::int64_t core;
    squarefree_core(disc, f, core);
    CMData out;
    out.core_disc = core;
    auto q = [](const mpz_class& num, const mpz_class& den) {
        mpq_class r(num, den);
        r.canonicalize();
        return r;
    };
    out.tau1 = Scalar(q(-T.b, 2 * T.a), q(f, 2 * T.a), core);
    out.tau2 = Scalar(q(T.b, 2), q(f, 2), core);
    out.equal = (out.tau1 == out.tau2);
    return out;
}

bool rational_self_isogeny_possible(const TranscendentalLattice2x2& T) {
    mpz_class n = T.det();
    if (n <= 0) throw std::invalid_argument("rational_self_isogeny_possible: lattice must be definite");
    for (mpz_class p = 3; p * p <= n; p += 2) {
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        mpz_class r = p % 8;
        if ((r == 3 || r == 5) && e % 2) return false;
    }
    while (n % 2 == 0) n /= 2;
    mpz_class r = n % 8;
    if (n > 1 && (r == 3 || r == 5)) return false;
    return true;
}

}  // namespace k3ff
