#pragma once

// Kummer-product invariants, Legendre parameter arithmetic, CM data of the
// singular family members and the rational-isometry criterion deciding which
// of them can carry an order-two self isogeny.

#include "k3ff/tower.hpp"
#include "k3ff/wcurve.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace k3ff {

// Even positive definite rank-2 lattice with Gram [2a b; b 2c].
struct TranscendentalLattice2x2 {
    mpz_class a, b, c;

    TranscendentalLattice2x2(long pa, long pb, long pc) : a(pa), b(pb), c(pc) {}

    mpz_class det() const { return 4 * a * c - b * b; }
};

// (j1*j2, (j1-1728)*(j2-1728)) of the elliptic curves whose Kummer product
// is the order-two quotient of Y^2 = X^3 + (t + 1/t + a)X^2 + b^2 X:
//   j1*j2 = 4096 (a^2 - 3 + 12 b^2)^3 / b^2
//   (j1-1728)(j2-1728) = 1024 a^2 (2a^2 - 9 - 72 b^2)^2 / b^2
std::pair<KT, KT> kummer_invariants(const KT& a, const KT& b);

// The analogous invariant pair of the order-four family:
//   j1*j2 = (256 k^2 - 16 k - 767)^3
//   (j1-1728)(j2-1728) = (32 k - 1)^2 (128 k^2 - 8 k - 577)^2
std::pair<KT, KT> remark43_invariants(const KT& k);

// j = 256 (1 - l + l^2)^3 / (l^2 (l - 1)^2); l must avoid {0, 1}.
KT legendre_j(const KT& l);

// The six Legendre parameters sharing one j-invariant:
// l, 1/l, 1-l, (l-1)/l, 1/(1-l), l/(l-1).
std::vector<KT> legendre_orbit(const KT& l);

// CM periods of the Shioda-Inose partners of a surface with transcendental
// lattice T: tau1 = (-b + sqrt(b^2-4ac))/(2a), tau2 = (b + sqrt(b^2-4ac))/2,
// written over the squarefree core of b^2 - 4ac.
struct CMData {
    Scalar tau1, tau2;
    std::int64_t core_disc = 1;  // squarefree core of b^2 - 4ac
    bool equal = false;          // tau1 == tau2
};
CMData shioda_inose_cm(const TranscendentalLattice2x2& T);

// Rank-2 case of the rational-isometry criterion for order-two isogenies:
// T_Q is isometric to T_Q(2) iff v_q(det T) is even for every prime q
// congruent to 3 or 5 modulo 8.
bool rational_self_isogeny_possible(const TranscendentalLattice2x2& T);

}  // namespace k3ff
