#include "k3ff/height.hpp"

#include <climits>

namespace k3ff {

namespace {

// ---- arithmetic in the residue ring R = K(s)[t]/(P) -------------------------

TPoly rmod(const TPoly& a, const TPoly& p) { return a % p; }

TPoly rinv(const TPoly& a, const TPoly& p) {
    TPoly u, v;
    TPoly g = ext_gcd(rmod(a, p), p, u, v);
    if (g.deg() != 0)
        throw surface_error("zero divisor met while identifying a fiber component at " +
                            k3ff::str(p));
    return rmod(u, p);
}

TPoly rmul(const TPoly& a, const TPoly& b, const TPoly& p) { return rmod(a * b, p); }

// reduce a rational function with nonnegative valuation at P into R
TPoly reduce_kt(const KT& f, const TPoly& p) {
    if (f.is_zero()) return TPoly();
    return rmul(rmod(f.num(), p), rinv(f.den(), p), p);
}

// P^e as an element of K(s)(t), e possibly negative
KT place_pow(const TPoly& p, long e) {
    if (e >= 0) return KT(p.pow(static_cast<unsigned>(e)));
    return KT(1) / KT(p.pow(static_cast<unsigned>(-e)));
}

long val_or_inf(const KT& f, const TPoly& p) {
    if (f.is_zero()) return LONG_MAX / 4;
    return f.valuation(p);
}

// ---- multiple roots of cubics over R ----------------------------------------

// f = x^3 + c2 x^2 + c1 x + c0 over R with a repeated root; return it.
// mult_out receives 2 (double root) or 3 (triple root).
TPoly repeated_root(const TPoly& c2, const TPoly& c1, const TPoly& c0, const TPoly& p,
                    int* mult_out) {
    // f' = 3x^2 + 2 c2 x + c1; remainder of f by f'/3-monicized
    // work with f' directly: divide f by f' over the fraction-free route
    // r(x) = f - (x/3 + c2/9) f' = (2/3 c1 - 2/9 c2^2) x + (c0 - c1 c2 / 9)
    KS third = KS(Scalar(mpq_class(1, 3)));
    KS ninth = KS(Scalar(mpq_class(1, 9)));
    TPoly ra = rmod(TPoly(third) * c1 * 2 - TPoly(ninth) * c2 * c2 * 2, p);
    TPoly rb = rmod(c0 - TPoly(ninth) * c1 * c2, p);
    if (ra.is_zero() && rb.is_zero()) {
        // f' divides f: triple root at -c2/3
        if (mult_out) *mult_out = 3;
        return rmod(-(TPoly(third) * c2), p);
    }
    if (ra.is_zero())
        throw surface_error("no repeated root of local cubic at " + k3ff::str(p));
    // candidate double root x0 = -rb/ra; verify f'(x0) = 0
    TPoly x0 = rmod(-rmul(rb, rinv(ra, p), p), p);
    TPoly fp = rmod(TPoly(3) * x0 * x0 + TPoly(2) * c2 * x0 + c1, p);
    TPoly f0 = rmod(x0 * x0 * x0 + c2 * x0 * x0 + c1 * x0 + c0, p);
    if (!fp.is_zero() || !f0.is_zero())
        throw surface_error("no repeated root of local cubic at " + k3ff::str(p));
    if (mult_out) *mult_out = 2;
    return x0;
}

// Newton-lift the node abscissa (simple root of f') to precision p^prec.
TPoly lift_node(const KT& c2, const KT& c1, const TPoly& p, const TPoly& x0, int prec) {
    TPoly pm = p.pow(static_cast<unsigned>(prec));
    TPoly a2 = reduce_kt(c2, pm), a1 = reduce_kt(c1, pm);
    TPoly x = x0;
    for (int it = 0; it < prec + 2; ++it) {
        TPoly fp = rmod(TPoly(3) * x * x + TPoly(2) * a2 * x + a1, pm);
        TPoly fpp = rmod(TPoly(6) * x + TPoly(2) * a2, pm);
        TPoly u, v;
        TPoly g = ext_gcd(rmod(fpp, p.pow(1)), p, u, v);
        if (g.deg() != 0) throw surface_error("node lift failed at " + k3ff::str(p));
        // Newton step with the inverse lifted along (crude but exact): invert
        // fpp modulo p^prec via Hensel iteration on the inverse
        TPoly inv = rmod(u, pm);
        for (int h = 0; h < prec + 2; ++h)
            inv = rmod(inv * (TPoly(2) - fpp * inv), pm);
        x = rmod(x - fp * inv, pm);
    }
    return x;
}

// ---- local analysis ---------------------------------------------------------

struct LocalModel {
    // locally minimal completed-square model y^2 = x^3 + a2 x^2 + a4 x + a6
    KT a2, a4, a6;
    KT x, y;      // section in the same coordinates
    bool sec_inf; // section is the zero section
    KodairaFiber fiber;
};

LocalModel localize(const WeierstrassCurve& cs, const SectionPoint& p, const KodairaFiber& f,
                    const TPoly& place) {
    LocalModel m;
    long k = f.shift;
    m.a2 = cs.a2 * place_pow(place, -2 * k);
    m.a4 = cs.a4 * place_pow(place, -4 * k);
    m.a6 = cs.a6 * place_pow(place, -6 * k);
    m.sec_inf = p.inf;
    if (!p.inf) {
        m.x = p.x * place_pow(place, -2 * k);
        m.y = p.y * place_pow(place, -3 * k);
    }
    m.fiber = f;
    return m;
}

// contribution of one geometric fiber (degree weighting applied by callers)
mpq_class model_contribution(const LocalModel& m, const TPoly& p) {
    if (m.sec_inf) return 0;
    if (val_or_inf(m.x, p) < 0) return 0;  // meets the fiber on the zero section's component
    const KodairaFiber& f = m.fiber;
    if (f.is_good()) return 0;

    // singular point of the reduced cubic
    TPoly c2 = reduce_kt(m.a2, p), c1 = reduce_kt(m.a4, p), c0 = reduce_kt(m.a6, p);
    int mult = 0;
    TPoly x0 = repeated_root(c2, c1, c0, p, &mult);
    TPoly xbar = reduce_kt(m.x, p);
    if (!rmod(xbar - x0, p).is_zero()) return 0;  // identity component
    if (!reduce_kt(m.y, p).is_zero()) return 0;   // off the singular point

    switch (f.cls) {
        case FiberClass::II:
        case FiberClass::IIstar: return 0;
        case FiberClass::III: return mpq_class(1, 2);
        case FiberClass::IIIstar: return mpq_class(3, 2);
        case FiberClass::IV: return mpq_class(2, 3);
        case FiberClass::IVstar: return mpq_class(4, 3);
        case FiberClass::I: {
            int n = f.n;
            if (n <= 1) return 0;
            int half = n / 2;
            // distance to the node, computed against a lifted abscissa
            TPoly x0l = lift_node(m.a2, m.a4, p, x0, half + 1);
            KT diff = m.x - KT(x0l);
            long a = val_or_inf(diff, p);
            long b = val_or_inf(m.y, p);
            long i = std::min({a, b, static_cast<long>(half)});
            return mpq_class(i * (n - i), n);
        }
        case FiberClass::Istar: {
            int n = f.n;
            if (n == 0) return 1;
            // translate to the singular point and look at the first blow-up:
            // Q(T) = T^3 + (A2/p) T^2 + (A4/p^2) T + A6/p^3 with x = x0 + pT
            KT x0k = KT(x0);
            KT A2 = m.a2 + kt(3) * x0k;
            KT A4 = kt(3) * x0k * x0k + kt(2) * m.a2 * x0k + m.a4;
            KT A6 = x0k * x0k * x0k + m.a2 * x0k * x0k + m.a4 * x0k + m.a6;
            KT pk = KT(p);
            KT q2 = A2 / pk, q1 = A4 / (pk * pk), q0 = A6 / (pk * pk * pk);
            if (val_or_inf(q2, p) < 0 || val_or_inf(q1, p) < 0 || val_or_inf(q0, p) < 0)
                throw surface_error("unexpected local shape for I_n^* at " + k3ff::str(p));
            TPoly t2 = reduce_kt(q2, p), t1 = reduce_kt(q1, p), t0 = reduce_kt(q0, p);
            int qmult = 0;
            TPoly delta = repeated_root(t2, t1, t0, p, &qmult);
            if (qmult != 2)
                throw surface_error("I_n^* local cubic lacks a clean double root at " +
                                    k3ff::str(p));
            // remaining simple root from the coefficient sum
            TPoly sigma = rmod(-(t2 + TPoly(2) * delta), p);
            KT tp = (m.x - x0k) / pk;
            if (val_or_inf(tp, p) < 0)
                throw surface_error("section direction not integral at " + k3ff::str(p));
            TPoly tbar = reduce_kt(tp, p);
            if (rmod(tbar - sigma, p).is_zero() && !rmod(delta - sigma, p).is_zero())
                return 1;  // near component
            if (rmod(tbar - delta, p).is_zero()) return mpq_class(n + 4, 4);  // far pair
            throw surface_error("section meets no accessible I_n^* component at " +
                                k3ff::str(p));
        }
    }
    return 0;
}

// flip a curve and section to the chart at infinity (t -> 1/t)
WeierstrassCurve flip_curve(const WeierstrassCurve& c) {
    return WeierstrassCurve::from_a(flip_t(c.a1), flip_t(c.a2), flip_t(c.a3), flip_t(c.a4),
                                    flip_t(c.a6));
}

SectionPoint flip_point(const SectionPoint& p) {
    if (p.inf) return p;
    return SectionPoint(flip_t(p.x), flip_t(p.y));
}

struct LocalTotals {
    mpq_class contact = 0;  // (P.O)
    mpq_class contr = 0;    // sum of correction terms
};

void accumulate_place(const WeierstrassCurve& cs, const SectionPoint& p, const KodairaFiber& f,
                      const TPoly& place, int degree, LocalTotals& tot) {
    LocalModel m = localize(cs, p, f, place);
    if (!m.sec_inf) {
        long v = val_or_inf(m.x, place);
        if (v < 0) {
            if ((-v) % 2 != 0)
                throw surface_error("odd pole order of x at " + k3ff::str(place) +
                                    "; not a section of the minimal model");
            tot.contact += mpq_class((-v) / 2 * degree);
        }
    }
    tot.contr += mpq_class(degree) * model_contribution(m, place);
}

LocalTotals analyze(const WeierstrassCurve& c, const SectionPoint& p0) {
    WeierstrassCurve cs = c.completed_square();
    SectionPoint p = c.completed_square_point(p0);
    std::vector<KT> extra;
    if (!p.inf) extra.push_back(p.x);
    FiberScanner scan(cs, extra);
    LocalTotals tot;
    for (const auto& place : scan.basis())
        accumulate_place(cs, p, scan.at(place), place, place.deg(), tot);
    // the place at infinity, via the chart swap
    WeierstrassCurve ci = flip_curve(cs);
    SectionPoint pi = flip_point(p);
    accumulate_place(ci, pi, kodaira_type_at(ci, Place::finite(TPoly::var())), TPoly::var(), 1,
                     tot);
    return tot;
}

}  // namespace

mpq_class local_contribution(const WeierstrassCurve& c, const SectionPoint& p0,
                             const Place& place) {
    WeierstrassCurve cs = c.completed_square();
    SectionPoint p = c.completed_square_point(p0);
    if (place.at_inf) {
        WeierstrassCurve ci = flip_curve(cs);
        SectionPoint pi = flip_point(p);
        KodairaFiber f = kodaira_type_at(ci, Place::finite(TPoly::var()));
        return model_contribution(localize(ci, pi, f, TPoly::var()), TPoly::var());
    }
    KodairaFiber f = kodaira_type_at(cs, place);
    return model_contribution(localize(cs, p, f, place.p), place.p);
}

mpq_class contact_with_zero(const WeierstrassCurve& c, const SectionPoint& p) {
    return analyze(c, p).contact;
}

mpq_class section_height(const WeierstrassCurve& c, const SectionPoint& p) {
    if (p.inf) return 0;
    if (!c.on_curve(p)) throw surface_error("height of a point not on the curve");
    LocalTotals tot = analyze(c, p);
    return mpq_class(4) + 2 * tot.contact - tot.contr;
}

mpq_class height_pairing(const WeierstrassCurve& c, const SectionPoint& p, const SectionPoint& q) {
    mpq_class hpq = section_height(c, ec_add(c, p, q));
    return (hpq - section_height(c, p) - section_height(c, q)) / 2;
}

mpq_class shioda_tate_audit(const FibrationReport& rep,
                            const std::vector<std::vector<mpq_class>>& height_gram,
                            const mpz_class& torsion_order) {
    // determinant of the height Gram matrix by fraction-free elimination
    size_t n = height_gram.size();
    std::vector<std::vector<mpq_class>> a = height_gram;
    mpq_class det = 1;
    for (size_t i = 0; i < n; ++i) {
        size_t piv = i;
        while (piv < n && a[piv][i] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != i) {
            std::swap(a[piv], a[i]);
            det = -det;
        }
        det *= a[i][i];
        for (size_t r = i + 1; r < n; ++r) {
            mpq_class f = a[r][i] / a[i][i];
            for (size_t col = i; col < n; ++col) a[r][col] -= f * a[i][col];
        }
    }
    if (det < 0) det = -det;
    mpq_class m1 = 1;
    for (const auto& f : rep.fibers)
        for (int d = 0; d < f.place.degree(); ++d) m1 *= f.simple_components();
    return det * m1 / (mpq_class(torsion_order) * torsion_order);
}

int picard_number(const FibrationReport& rep, int mw_rank) {
    int rho = 2 + mw_rank;
    for (const auto& f : rep.fibers) rho += (f.components() - 1) * f.place.degree();
    return rho;
}

}  // namespace k3ff
