#include "k3ff/wcurve.hpp"

namespace k3ff {

namespace {

void fill_invariants(WeierstrassCurve& c) {
    const KT &a1 = c.a1, &a2 = c.a2, &a3 = c.a3, &a4 = c.a4, &a6 = c.a6;
    c.b2 = a1 * a1 + kt(4) * a2;
    c.b4 = kt(2) * a4 + a1 * a3;
    c.b6 = a3 * a3 + kt(4) * a6;
    c.b8 = a1 * a1 * a6 + kt(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    c.c4 = c.b2 * c.b2 - kt(24) * c.b4;
    c.c6 = -(c.b2 * c.b2 * c.b2) + kt(36) * c.b2 * c.b4 - kt(216) * c.b6;
    c.disc = -(c.b2 * c.b2) * c.b8 - kt(8) * c.b4 * c.b4 * c.b4 - kt(27) * c.b6 * c.b6 +
             kt(9) * c.b2 * c.b4 * c.b6;
    if (c.disc.is_zero()) throw surface_error("singular Weierstrass equation (disc = 0)");
}

}  // namespace

WeierstrassCurve WeierstrassCurve::from_a(const KT& a1, const KT& a2, const KT& a3, const KT& a4,
                                          const KT& a6) {
    WeierstrassCurve c;
    c.a1 = a1;
    c.a2 = a2;
    c.a3 = a3;
    c.a4 = a4;
    c.a6 = a6;
    fill_invariants(c);
    return c;
}

WeierstrassCurve WeierstrassCurve::from_ab(const KT& A, const KT& B) {
    return from_a(kt(0), A, kt(0), B, kt(0));
}

WeierstrassCurve WeierstrassCurve::from_rhs(const KT& a2, const KT& a4, const KT& a6) {
    return from_a(kt(0), a2, kt(0), a4, a6);
}

bool WeierstrassCurve::on_curve(const SectionPoint& p) const {
    if (p.inf) return true;
    KT lhs = p.y * p.y + a1 * p.x * p.y + a3 * p.y;
    KT rhs = p.x * p.x * p.x + a2 * p.x * p.x + a4 * p.x + a6;
    return lhs == rhs;
}

WeierstrassCurve WeierstrassCurve::completed_square() const {
    KT half = KT(1) / kt(2);
    KT quarter = KT(1) / kt(4);
    return from_rhs(a2 + quarter * a1 * a1, a4 + half * a1 * a3, a6 + quarter * a3 * a3);
}

SectionPoint WeierstrassCurve::completed_square_point(const SectionPoint& p) const {
    if (p.inf) return p;
    KT half = KT(1) / kt(2);
    return SectionPoint(p.x, p.y + half * (a1 * p.x + a3));
}

bool WeierstrassCurve::section_from_x(const KT& x, SectionPoint& out) const {
    WeierstrassCurve cs = completed_square();
    KT rhs = x * x * x + cs.a2 * x * x + cs.a4 * x + cs.a6;
    KT y;
    if (rhs.is_zero())
        y = KT(0);
    else if (!sqrt_in_tower(rhs, y))
        return false;
    KT half = KT(1) / kt(2);
    out = SectionPoint(x, y - half * (a1 * x + a3));
    return true;
}

SectionPoint ec_neg(const WeierstrassCurve& c, const SectionPoint& p) {
    if (p.inf) return p;
    return SectionPoint(p.x, -p.y - c.a1 * p.x - c.a3);
}

SectionPoint ec_add(const WeierstrassCurve& c, const SectionPoint& p, const SectionPoint& q) {
    if (p.inf) return q;
    if (q.inf) return p;
    KT lambda, nu;
    if (p.x == q.x) {
        SectionPoint nq = ec_neg(c, q);
        if (p.y == nq.y) return SectionPoint::infinity();
        // tangent line at p
        KT den = kt(2) * p.y + c.a1 * p.x + c.a3;
        lambda = (kt(3) * p.x * p.x + kt(2) * c.a2 * p.x + c.a4 - c.a1 * p.y) / den;
    } else {
        lambda = (q.y - p.y) / (q.x - p.x);
    }
    nu = p.y - lambda * p.x;
    KT x3 = lambda * lambda + c.a1 * lambda - c.a2 - p.x - q.x;
    KT y3 = -(lambda + c.a1) * x3 - nu - c.a3;
    return SectionPoint(x3, y3);
}

SectionPoint ec_mul(const WeierstrassCurve& c, long n, const SectionPoint& p) {
    if (n < 0) return ec_mul(c, -n, ec_neg(c, p));
    SectionPoint acc = SectionPoint::infinity(), base = p;
    while (n) {
        if (n & 1) acc = ec_add(c, acc, base);
        base = ec_add(c, base, base);
        n >>= 1;
    }
    return acc;
}

int point_order(const WeierstrassCurve& c, const SectionPoint& p, int bound) {
    SectionPoint acc = p;
    for (int n = 1; n <= bound; ++n) {
        if (acc.inf) return n;
        acc = ec_add(c, acc, p);
    }
    return 0;
}

WeierstrassCurve to_two_torsion_form(const WeierstrassCurve& c, const KT& x0, KT* a_out,
                                     KT* b_out) {
    if (!c.a1.is_zero() || !c.a3.is_zero())
        throw surface_error("two-torsion form requires a1 = a3 = 0");
    KT r = x0 * x0 * x0 + c.a2 * x0 * x0 + c.a4 * x0 + c.a6;
    if (!r.is_zero()) throw surface_error("x0 is not a two-torsion x-coordinate");
    KT A = kt(3) * x0 + c.a2;
    KT B = kt(3) * x0 * x0 + kt(2) * c.a2 * x0 + c.a4;
    if (a_out) *a_out = A;
    if (b_out) *b_out = B;
    return WeierstrassCurve::from_ab(A, B);
}

WeierstrassCurve two_isogeny(const KT& A, const KT& B) {
    return WeierstrassCurve::from_ab(kt(-2) * A, A * A - kt(4) * B);
}

WeierstrassCurve quartic_jacobian(const KT& a, const KT& b, const KT& c, const KT& d, const KT& e) {
    KT c4 = kt(16) * (kt(12) * a * e - kt(3) * b * d + c * c);
    KT c6 = kt(32) * (kt(72) * a * c * e - kt(27) * a * d * d - kt(27) * b * b * e +
                      kt(9) * b * c * d - kt(2) * c * c * c);
    return WeierstrassCurve::from_rhs(kt(0), kt(-27) * c4, kt(-54) * c6);
}

WeierstrassCurve quartic_with_square_constant_to_weierstrass(const KT& a, const KT& b, const KT& c,
                                                             const KT& d, const KT& e) {
    if (e.is_zero()) throw surface_error("square-constant quartic transform needs e != 0");
    // y^2 = a x^4 + b x^3 + c x^2 + d x + e^2 with the rational point (0, e)
    KT A1 = d / e;
    KT A2 = c - d * d / (kt(4) * e * e);
    KT A3 = kt(2) * e * b;
    KT A4 = kt(-4) * e * e * a;
    KT A6 = A2 * A4;
    return WeierstrassCurve::from_a(A1, A2, A3, A4, A6);
}

WeierstrassCurve sextic_twotorsion_transform(const KT& A, const KT& B) {
    // (x + A)(x^2 - 4B) expanded
    return WeierstrassCurve::from_rhs(A, kt(-4) * B, kt(-4) * A * B);
}

}  // namespace k3ff
