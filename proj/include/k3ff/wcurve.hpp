#pragma once

// Weierstrass curves over the function field K(s)(t): exact invariants,
// chord-tangent group law, two-torsion normal forms, 2-isogenies and the
// quartic/sextic genus-one transformations used to move between fibrations.

#include "k3ff/tower.hpp"

#include <stdexcept>
#include <string>

namespace k3ff {

class surface_error : public std::runtime_error {
public:
    explicit surface_error(const std::string& what) : std::runtime_error(what) {}
};

struct SectionPoint {
    bool inf = true;
    KT x, y;

    SectionPoint() = default;
    SectionPoint(KT px, KT py) : inf(false), x(std::move(px)), y(std::move(py)) {}
    static SectionPoint infinity() { return SectionPoint(); }
};

struct WeierstrassCurve {
    KT a1, a2, a3, a4, a6;
    // cached quantities of the standard formulary
    KT b2, b4, b6, b8, c4, c6, disc;

    // j = c4^3 / disc; computed on demand (the fraction reduction is costly)
    KT jinv() const { return c4 * c4 * c4 / disc; }

    static WeierstrassCurve from_a(const KT& a1, const KT& a2, const KT& a3, const KT& a4,
                                   const KT& a6);
    // y^2 = x^3 + A x^2 + B x (two-torsion housed at the origin)
    static WeierstrassCurve from_ab(const KT& A, const KT& B);
    // y^2 = x^3 + a2 x^2 + a4 x + a6
    static WeierstrassCurve from_rhs(const KT& a2, const KT& a4, const KT& a6);

    bool on_curve(const SectionPoint& p) const;

    // model with a1 = a3 = 0 obtained by completing the square (char 0)
    WeierstrassCurve completed_square() const;
    SectionPoint completed_square_point(const SectionPoint& p) const;

    // y solving the curve equation for the given x, when it exists in the
    // tower; picks the square root produced by sqrt_in_tower
    bool section_from_x(const KT& x, SectionPoint& out) const;
};

SectionPoint ec_neg(const WeierstrassCurve& c, const SectionPoint& p);
SectionPoint ec_add(const WeierstrassCurve& c, const SectionPoint& p, const SectionPoint& q);
SectionPoint ec_mul(const WeierstrassCurve& c, long n, const SectionPoint& p);

// smallest 1 <= n <= bound with n*P = O, or 0 when the order exceeds bound
int point_order(const WeierstrassCurve& c, const SectionPoint& p, int bound);

// Given a curve with a1 = a3 = 0 and x0 a root of the right-hand cubic,
// translate x by x0 into the form y^2 = x^3 + A x^2 + B x.
WeierstrassCurve to_two_torsion_form(const WeierstrassCurve& c, const KT& x0, KT* a_out = nullptr,
                                     KT* b_out = nullptr);

// Quotient by the two-torsion point (0,0): y^2 = x^3 - 2A x^2 + (A^2-4B) x.
WeierstrassCurve two_isogeny(const KT& A, const KT& B);

// Jacobian of the genus one quartic y^2 = a x^4 + b x^3 + c x^2 + d x + e:
// ybar^2 = xbar^3 - 27 c4 xbar - 54 c6 with c4 = 2^4(12ae - 3bd + c^2),
// c6 = 2^5(72ace - 27ad^2 - 27b^2e + 9bcd - 2c^3).
WeierstrassCurve quartic_jacobian(const KT& a, const KT& b, const KT& c, const KT& d, const KT& e);

// Weierstrass form of y^2 = a x^4 + b x^3 + c x^2 + d x + e^2 (e != 0) via
// the substitution moving the rational point (0, e) to infinity.
WeierstrassCurve quartic_with_square_constant_to_weierstrass(const KT& a, const KT& b, const KT& c,
                                                             const KT& d, const KT& e);

// The two-torsion sextic normal form y^2 = (x + A)(x^2 - 4B); a translate of
// two_isogeny(A, B).
WeierstrassCurve sextic_twotorsion_transform(const KT& A, const KT& B);

}  // namespace k3ff
