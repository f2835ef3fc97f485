#pragma once

// Rational equivalence of small quadratic forms via Hasse-Minkowski
// invariants (signature, determinant square class, Hasse symbols), witness
// verification for explicit isometries, and the parity test for self
// 2-isogenies of singular K3 surfaces.

#include "k3ff/intmat.hpp"

#include <string>
#include <vector>

namespace k3ff {

// Hilbert symbol (a,b)_p for nonzero rationals; p = 0 encodes the real place.
int hilbert_symbol(const mpq_class& a, const mpq_class& b, const mpz_class& p);

// Diagonalization of a nondegenerate symmetric matrix by congruence over Q.
QVec diagonalize_form(QMat m);

struct FormInvariants {
    int rank = 0;
    int positives = 0;  // signature
    mpq_class det_class;  // squarefree integer representative
    std::vector<std::pair<mpz_class, int>> hasse;  // (prime, symbol) with symbol -1 only
};

FormInvariants form_invariants(const QMat& gram);

// Equivalence over Q for nondegenerate forms of equal rank (the catalog only
// needs rank 2 and 3).  When a witness M is given, verifies M^t A M = B
// exactly instead.
bool rationally_equivalent(const QMat& a, const QMat& b);
bool isometry_witness_ok(const QMat& a, const QMat& b, const QMat& m);

// BSV parity test: a 2-isogeny can induce a rational transcendental-lattice
// isometry iff the rank is even and v_q(det T) is even for every prime
// q = 3, 5 mod 8.
struct BsvResult {
    bool self_isogeny_possible = false;
    std::string reason;
};
BsvResult bsv_self_isogeny_test(const ZMat& transcendental_gram);

}  // namespace k3ff
