#include "k3ff/kummer.hpp"

#include <stdexcept>

namespace k3ff {

namespace {

KT kc(const Scalar& x) { return kt(KS(x)); }

bool is_silver_ratio(const Scalar& l) {
    // roots of l^2 - 6l + 1, i.e. 3 +- 2 sqrt(2)
    return (l * l - Scalar(6) * l + Scalar(1)).is_zero();
}

}  // namespace

KummerFibration kummer_product_fibration(const Scalar& l1, const Scalar& l2, KummerFrame which) {
    KT t = var_t();
    KT c1 = kc(l1), c2 = kc(l2);
    KummerFibration out;
    switch (which) {
        case KummerFrame::F6: {
            // H_u: Y^2 = X (X - u(u-1)(u l2 - l1)) (X - u(u - l1)(l2 u - 1))
            KT A = t * (t - kt(1)) * (t * c2 - c1);
            KT B = t * (t - c1) * (c2 * t - kt(1));
            out.curve = WeierstrassCurve::from_rhs(-(A + B), A * B, kt(0));
            out.expected_fibers = (l1 == l2) ? "2I2*+I4+2I2" : "2I2*+4I2";
            return out;
        }
        case KummerFrame::F5: {
            KT c = kt(2) * c1 * c2 * (c1 - kt(1)) * (c2 - kt(1));
            KT g = kt(4) * t * t * t + kt(4) * (c1 + c2 + kt(1) - kt(2) * c1 * c2) * t * t +
                   kt(4) * (c1 * c2 - kt(1)) * (c1 * c2 - c1 - c2) * t + c;
            // Y^2 = (X - c)(X + c)(X + g)
            out.curve = WeierstrassCurve::from_rhs(g, -c * c, -c * c * g);
            out.expected_fibers = (l1 == l2) ? "I6*+I4+4I2" : "I6*+6I2";
            return out;
        }
        case KummerFrame::F8: {
            if (!is_silver_ratio(l1) || !(l1 * l2 == Scalar(1)))
                throw std::invalid_argument(
                    "kummer_product_fibration: F8 model known only for l2 = 1/l1 = 1/(3+-2sqrt2)");
            out.curve = WeierstrassCurve::from_ab(kt(-2) * t * t * (t - kt(1)),
                                                  t * t * t * (t + kt(1)) * (t + kt(1)) * (t - kt(4)));
            out.expected_fibers = "III*+I2*+I4+I2+I1";
            return out;
        }
        case KummerFrame::G8: {
            if (!is_silver_ratio(l1) || !(l1 == l2))
                throw std::invalid_argument(
                    "kummer_product_fibration: G8 model known only for l1 = l2 = 3+-2sqrt2");
            out.curve = WeierstrassCurve::from_ab(kt(2) * (t + kt(5) * t * t),
                                                  t * t * (kt(4) * t + kt(1)) *
                                                      (t * t + kt(6) * t + kt(1)));
            out.expected_fibers = "I3*+III*+3I2";
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

SabKummerReport sab_kummer_check(const KT& a, const KT& b) {
    KT t = var_t();
    SabKummerReport rep;
    // model cleared of 1/t: (x, y) -> (x/t^2, y/t^3)
    KT At2 = t * t * t + a * t * t + t;  // (t + 1/t + a) t^2
    KT Bt4 = b * b * t * t * t * t;
    rep.curve = WeierstrassCurve::from_ab(At2, Bt4);

    KT p1 = t * (t * t + (a - kt(2) * b) * t + kt(1));
    KT p2 = t * (t * t + (a + kt(2) * b) * t + kt(1));
    rep.quotient = WeierstrassCurve::from_rhs(-(p1 + p2), p1 * p2, kt(0));

    // the product model must literally be the (0,0)-quotient after the same
    // clearing: a2 = -2A t^2, a4 = (A^2 - 4B) t^4
    rep.quotient_matches_formula =
        (p1 + p2 == kt(2) * At2) && (p1 * p2 == At2 * At2 - kt(4) * Bt4);

    rep.quotient_fibers = fiber_configuration(rep.quotient).config();
    KodairaFiber f0 = kodaira_type_at(rep.quotient, Place::finite(TPoly::var()));
    KodairaFiber finf = kodaira_type_at(rep.quotient, Place::infinity());
    rep.star_fibers_at_ends = (f0.type_str() == "I2*") && (finf.type_str() == "I2*");
    return rep;
}

SabKummerReport sab_kummer_check_with_roots(const Scalar& w1, const Scalar& w2) {
    if (w1.is_zero() || w2.is_zero())
        throw std::invalid_argument("sab_kummer_check_with_roots: roots must be nonzero");
    Scalar s1 = w1 + w1.inverse();  // = -(a - 2b)
    Scalar s2 = w2 + w2.inverse();  // = -(a + 2b)
    Scalar a = -(s1 + s2) / Scalar(2);
    Scalar b = (s1 - s2) / Scalar(4);
    SabKummerReport rep = sab_kummer_check(kc(a), kc(b));
    rep.has_legendre = true;
    rep.l1 = w2 / w1;
    rep.l2 = w1 * w2;
    KummerFibration h = kummer_product_fibration(rep.l1, rep.l2, KummerFrame::F6);
    KT jq_at = substitute_t(rep.quotient.jinv(), kc(w1) * var_t());
    rep.j_matches = (jq_at == h.curve.jinv());
    return rep;
}

}  // namespace k3ff
