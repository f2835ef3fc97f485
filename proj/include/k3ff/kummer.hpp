#pragma once

// Elliptic fibrations on the Kummer surface of a product of two elliptic
// curves with Legendre parameters l1, l2, and the check identifying the
// order-two quotient of the family Y^2 = X^3 + (t + 1/t + a) X^2 + b^2 X
// with such a Kummer surface.

#include "k3ff/kodaira.hpp"
#include "k3ff/wcurve.hpp"

#include <string>

namespace k3ff {

// Fibrations of the product Kummer surface named after their elliptic
// parameter.  F5, F6 have closed-form models for arbitrary (l1, l2); F8 and
// G8 are available only at the catalogued specialization l1 = 3 + 2 sqrt(2)
// (with l2 = 1/l1 resp. l2 = l1), where printed models exist.
enum class KummerFrame { F5, F6, F8, G8 };

struct KummerFibration {
    WeierstrassCurve curve;
    std::string expected_fibers;  // catalogued configuration for these (l1, l2)
};

KummerFibration kummer_product_fibration(const Scalar& l1, const Scalar& l2, KummerFrame which);

// Verification record for the Kummer identification of the quotient of
// S_{a,b}: Y^2 = X^3 + (t + 1/t + a) X^2 + b^2 X by its (0,0) translation.
struct SabKummerReport {
    WeierstrassCurve curve;     // S_{a,b}, cleared of denominators
    WeierstrassCurve quotient;  // product model Y^2 = X(X - P1)(X - P2)
    bool quotient_matches_formula = false;  // product model == scaled (0,0)-quotient
    std::string quotient_fibers;            // computed configuration of the quotient
    bool star_fibers_at_ends = false;       // I2* at t = 0 and t = infinity

    // filled by the root-supplied variant
    bool has_legendre = false;
    Scalar l1, l2;           // l1 = w2/w1, l2 = w1*w2
    bool j_matches = false;  // j of the quotient at t = w1*u equals j of the
                             // Kummer F6 fibration at u
};

// a, b in K(s); P1 = t(t^2 + (a-2b)t + 1), P2 = t(t^2 + (a+2b)t + 1).
SabKummerReport sab_kummer_check(const KT& a, const KT& b);

// Variant with explicit roots w1 of t^2 + (a-2b)t + 1 and w2 of
// t^2 + (a+2b)t + 1; a, b are recovered from them and the Legendre
// comparison is performed.
SabKummerReport sab_kummer_check_with_roots(const Scalar& w1, const Scalar& w2);

}  // namespace k3ff
