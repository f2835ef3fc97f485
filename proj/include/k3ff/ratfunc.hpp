#pragma once

// Rational functions num/den over a field F, reduced to lowest terms with a
// monic denominator.  This type itself satisfies the field interface used by
// Poly, so the coefficient tower Q(sqrt(D)) < K(s) < K(s)[t] < K(s)(t) is
// obtained by nesting Poly and RatFunc.

#include "k3ff/poly.hpp"

namespace k3ff {

template <class F>
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long v) : num_(v), den_(1) {}
    RatFunc(const F& c) : num_(c), den_(1) {}
    RatFunc(const Poly<F>& p) : num_(p), den_(1) {}
    RatFunc(Poly<F> n, Poly<F> d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    static RatFunc var() { return RatFunc(Poly<F>::var()); }

    const Poly<F>& num() const { return num_; }
    const Poly<F>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.deg() == 0; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        // cross-cancel first to keep intermediate degrees down
        Poly<F> g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
        RatFunc r;
        r.num_ = (a.num_ / g1) * (b.num_ / g2);
        r.den_ = (a.den_ / g2) * (b.den_ / g1);
        r.normalize_lead();
        return r;
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("division by zero rational function");
        RatFunc inv;
        inv.num_ = b.den_;
        inv.den_ = b.num_;
        inv.normalize_lead();
        return a * inv;
    }

    RatFunc inverse() const { return RatFunc(1) / *this; }

    template <class G>
    G eval(const G& x) const {
        G n = num_.template eval<G>(x);
        G d = den_.template eval<G>(x);
        return n / d;
    }

    // Valuation at the place given by a monic squarefree polynomial p: the
    // multiplicity of p in num minus the multiplicity in den.
    int valuation(const Poly<F>& p) const {
        if (is_zero()) throw std::domain_error("valuation of zero");
        return multiplicity(num_, p) - multiplicity(den_, p);
    }

    // Valuation at infinity: deg(den) - deg(num).
    int valuation_inf() const {
        if (is_zero()) throw std::domain_error("valuation of zero");
        return den_.deg() - num_.deg();
    }

private:
    void reduce() {
        if (den_.is_zero()) throw std::domain_error("zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<F>(1);
            return;
        }
        Poly<F> g = gcd(num_, den_);
        if (g.deg() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        normalize_lead();
    }
    void normalize_lead() {
        if (num_.is_zero()) {
            den_ = Poly<F>(1);
            return;
        }
        F k = F(1) / den_.lead();
        num_ = num_.scaled(k);
        den_ = den_.scaled(k);
    }
    Poly<F> num_, den_;
};

// ---------------------------------------------------------------------------
// Fraction-free gcd for polynomials whose coefficients are rational functions.
// The generic Euclidean gcd in poly.hpp suffers severe intermediate-expression
// swell over K(s); clearing denominators and running the subresultant PRS over
// K[s] keeps coefficient degrees linear.  This overload is more specialized
// than the template in poly.hpp and wins overload resolution for such types.

namespace ffgcd_detail {

// lcm of the denominators, and the numerator polynomial vector scaled to it
template <class F>
Poly<Poly<F>> clear_denominators(const Poly<RatFunc<F>>& p, Poly<F>* den_out = nullptr) {
    Poly<F> den(1);
    for (const auto& c : p.coeffs()) {
        if (c.is_zero()) continue;
        Poly<F> g = gcd(den, c.den());
        den = den * (c.den() / g);
    }
    std::vector<Poly<F>> coeffs;
    for (const auto& c : p.coeffs()) coeffs.push_back(c.num() * (den / c.den()));
    if (den_out) *den_out = den;
    return Poly<Poly<F>>(std::move(coeffs));
}

template <class F>
Poly<F> content(const Poly<Poly<F>>& p) {
    Poly<F> g;
    for (const auto& c : p.coeffs()) g = gcd(g, c);
    return g;
}

// divide every coefficient by the (exactly dividing) scalar d
template <class F>
Poly<Poly<F>> scalar_div(const Poly<Poly<F>>& p, const Poly<F>& d) {
    std::vector<Poly<F>> coeffs;
    for (const auto& c : p.coeffs()) coeffs.push_back(c / d);
    return Poly<Poly<F>>(std::move(coeffs));
}

}  // namespace ffgcd_detail

template <class G>
Poly<RatFunc<G>> gcd(const Poly<RatFunc<G>>& pa, const Poly<RatFunc<G>>& pb) {
    using ffgcd_detail::clear_denominators;
    using ffgcd_detail::content;
    using ffgcd_detail::scalar_div;
    using PF = Poly<G>;
    using PP = Poly<Poly<G>>;
    if (pa.is_zero()) return pb.monic();
    if (pb.is_zero()) return pa.monic();
    PP a = clear_denominators(pa);
    PP b = clear_denominators(pb);
    a = scalar_div(a, content(a));
    b = scalar_div(b, content(b));
    if (a.deg() < b.deg()) std::swap(a, b);
    PF g(1), h(1);
    while (true) {
        if (b.is_zero()) break;
        if (b.deg() == 0) {
            // unit in K(s)[t]
            return Poly<RatFunc<G>>(RatFunc<G>(PF(1)));
        }
        int delta = a.deg() - b.deg();
        // explicit pseudo-remainder lead(b)^(delta+1) * a mod b
        PP r = a;
        const PF& lb = b.lead();
        int steps = 0;
        while (!r.is_zero() && r.deg() >= b.deg()) {
            PP t = PP::monomial(r.lead(), r.deg() - b.deg());
            r = r.scaled(lb) - t * b;
            ++steps;
        }
        for (int i = steps; i < delta + 1; ++i) r = r.scaled(lb);
        if (r.is_zero()) break;
        a = b;
        PF divisor = g;
        for (int i = 0; i < delta; ++i) divisor = divisor * h;
        b = scalar_div(r, divisor);
        g = a.lead();
        if (delta > 0) {
            PF num(1);
            for (int i = 0; i < delta; ++i) num = num * g;
            PF denp(1);
            for (int i = 0; i < delta - 1; ++i) denp = denp * h;
            h = num / denp;
        }
    }
    PP res = b.is_zero() ? a : b;
    res = scalar_div(res, content(res));
    std::vector<RatFunc<G>> coeffs;
    for (const auto& c : res.coeffs()) coeffs.push_back(RatFunc<G>(c));
    return Poly<RatFunc<G>>(std::move(coeffs)).monic();
}

}  // namespace k3ff
