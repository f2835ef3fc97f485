#pragma once

// Finite quadratic forms (discriminant forms of even lattices): a finite
// abelian group in invariant-factor form together with q: G -> Q/2Z and
// b: G x G -> Q/Z.

#include "k3ff/intmat.hpp"

#include <string>
#include <vector>

namespace k3ff {

// value normalized into [0, m) for modulus m (2 for q, 1 for b)
mpq_class mod_q(const mpq_class& v, long m);

struct DiscForm {
    // invariant factors d1 | d2 | ... (all > 1); the group is prod Z/di
    std::vector<mpz_class> orders;
    // q-values of the generators, in Q/2Z
    std::vector<mpq_class> q_gen;
    // pairwise b-values of the generators, in Q/Z
    QMat b_gen;

    mpz_class group_order() const {
        mpz_class n = 1;
        for (const auto& d : orders) n *= d;
        return n;
    }

    // q and b on an arbitrary element written in generator exponents
    mpq_class q(const std::vector<long>& e) const;
    mpq_class b(const std::vector<long>& e, const std::vector<long>& f) const;

    std::string str() const;
};

// Convenience: build the form generated by independent generators of given
// orders and q-values with diagonal pairing (b(gi,gi) = qi/2, off-diagonal 0).
DiscForm diagonal_form(const std::vector<long>& orders, const std::vector<mpq_class>& qvals);

// Exhaustive isomorphism test between two finite quadratic forms.  Both
// groups must be small; the search matches generators order- and
// q/b-compatibly.
bool discform_isomorphic(const DiscForm& a, const DiscForm& b);

DiscForm negated(const DiscForm& a);

}  // namespace k3ff
