#pragma once

// Canonical heights of sections of an elliptic K3 fibration:
//   h(P) = 4 + 2 (P.O) - sum_v contr_v(P)
// with (P.O) read off from the pole orders of x in locally minimal models and
// the correction terms determined by the fiber component the section meets.
// Component identification failures raise surface_error rather than guessing.

#include "k3ff/kodaira.hpp"

#include <gmpxx.h>

namespace k3ff {

// Local correction term of P at one geometric fiber over the given place
// (not yet multiplied by the degree of the place).
mpq_class local_contribution(const WeierstrassCurve& c, const SectionPoint& p,
                             const Place& place);

// Intersection number (P.O): sum over places of half the (even) pole order of
// x in the locally minimal model, weighted by the degree of the place.
mpq_class contact_with_zero(const WeierstrassCurve& c, const SectionPoint& p);

mpq_class section_height(const WeierstrassCurve& c, const SectionPoint& p);
mpq_class height_pairing(const WeierstrassCurve& c, const SectionPoint& p, const SectionPoint& q);

// |det(height Gram)| * prod_v m_v^(1) / |torsion|^2; for a K3 fibration with
// the claimed Neron-Severi lattice this equals |det NS|.
mpq_class shioda_tate_audit(const FibrationReport& rep, const std::vector<std::vector<mpq_class>>& height_gram,
                            const mpz_class& torsion_order);

// 2 + sum_v (m_v - 1) + rank: the Picard number predicted by Shioda-Tate.
int picard_number(const FibrationReport& rep, int mw_rank);

}  // namespace k3ff
