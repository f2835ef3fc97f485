#pragma once

// Dense univariate polynomials over an arbitrary exact field F.  The field
// type must provide construction from long, the four arithmetic operators,
// operator==, and an is_zero() member.  Coefficients are stored low degree
// first and trailing zeros are trimmed eagerly, so deg() of the zero
// polynomial is -1.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace k3ff {

template <class F>
class Poly {
public:
    Poly() = default;
    Poly(long v) { push(F(v)); }
    Poly(const F& c) { push(c); }
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly var() {
        Poly p;
        p.c_ = {F(0), F(1)};
        return p;
    }
    static Poly monomial(const F& c, int e) {
        Poly p;
        if (c.is_zero()) return p;
        p.c_.assign(static_cast<size_t>(e) + 1, F(0));
        p.c_[static_cast<size_t>(e)] = c;
        return p;
    }

    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<F>& coeffs() const { return c_; }
    const F& operator[](int i) const {
        static const F zero{0};
        return (i >= 0 && i <= deg()) ? c_[static_cast<size_t>(i)] : zero;
    }
    const F& lead() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = F(0) - c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), F(0));
        for (size_t i = 0; i < r.c_.size(); ++i) {
            if (i < a.c_.size()) r.c_[i] = r.c_[i] + a.c_[i];
            if (i < b.c_.size()) r.c_[i] = r.c_[i] + b.c_[i];
        }
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, F(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }

    Poly scaled(const F& k) const {
        Poly r;
        if (k.is_zero()) return r;
        r.c_ = c_;
        for (auto& c : r.c_) c = c * k;
        r.trim();
        return r;
    }

    // Division with remainder; requires b nonzero.
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        q = Poly();
        r = a;
        F inv_lead = F(1) / b.lead();
        while (!r.is_zero() && r.deg() >= b.deg()) {
            F k = r.lead() * inv_lead;
            int e = r.deg() - b.deg();
            Poly t = monomial(k, e);
            q = q + t;
            r = r - t * b;
        }
    }
    friend Poly operator/(const Poly& a, const Poly& b) {
        Poly q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend Poly operator%(const Poly& a, const Poly& b) {
        Poly q, r;
        divmod(a, b, q, r);
        return r;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(F(1) / lead());
    }

    Poly derivative() const {
        Poly r;
        for (int i = 1; i <= deg(); ++i) r.c_.push_back(c_[static_cast<size_t>(i)] * F(i));
        r.trim();
        return r;
    }

    template <class G>
    G eval(const G& x) const {
        G acc(0);
        for (int i = deg(); i >= 0; --i) acc = acc * x + G(c_[static_cast<size_t>(i)]);
        return acc;
    }

    Poly pow(unsigned e) const {
        Poly r(1), base = *this;
        while (e) {
            if (e & 1u) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    // Coefficient reversal x -> 1/x cleared by x^n for n >= deg.
    Poly reversed(int n) const {
        if (n < deg()) throw std::domain_error("reversal bound below degree");
        std::vector<F> rc(static_cast<size_t>(n) + 1, F(0));
        for (int i = 0; i <= deg(); ++i) rc[static_cast<size_t>(n - i)] = c_[static_cast<size_t>(i)];
        return Poly(std::move(rc));
    }

private:
    void push(F c) {
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<F> c_;
};

template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        Poly<F> r = a % b;
        a = std::move(b);
        b = std::move(r).monic();
    }
    return a.monic();
}

// Extended gcd: returns g monic with g = u*a + v*b.
template <class F>
Poly<F> ext_gcd(const Poly<F>& a, const Poly<F>& b, Poly<F>& u, Poly<F>& v) {
    Poly<F> r0 = a, r1 = b, u0(1), u1(0), v0(0), v1(1);
    while (!r1.is_zero()) {
        Poly<F> q, r;
        Poly<F>::divmod(r0, r1, q, r);
        Poly<F> u2 = u0 - q * u1, v2 = v0 - q * v1;
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (r0.is_zero()) {
        u = Poly<F>(0);
        v = Poly<F>(0);
        return r0;
    }
    F k = F(1) / r0.lead();
    u = u0.scaled(k);
    v = v0.scaled(k);
    return r0.scaled(k);
}

// Yun's squarefree decomposition over a characteristic-zero field:
// a = lc * prod_i out[i]^(i+1) with the out[i] monic, squarefree and
// pairwise coprime (some may be 1).
template <class F>
std::vector<Poly<F>> squarefree_decompose(const Poly<F>& a) {
    std::vector<Poly<F>> out;
    if (a.deg() <= 0) return out;
    Poly<F> f = a.monic();
    Poly<F> fp = f.derivative();
    Poly<F> g = gcd(f, fp);
    Poly<F> w = f / g;
    Poly<F> y = fp / g;
    Poly<F> z = y - w.derivative();
    while (!w.is_zero() && w.deg() > 0) {
        Poly<F> p = gcd(w, z);
        out.push_back(p);
        w = w / p;
        z = z / p;
        z = z - w.derivative();
    }
    return out;
}

template <class F>
Poly<F> squarefree_part(const Poly<F>& a) {
    Poly<F> r(1);
    for (const auto& p : squarefree_decompose(a)) r = r * p;
    return r;
}

// Multiplicity of the monic factor p in a (p need not be irreducible; the
// count is the number of times p divides a exactly).
template <class F>
int multiplicity(Poly<F> a, const Poly<F>& p) {
    if (a.is_zero()) throw std::domain_error("multiplicity in zero polynomial");
    if (p.deg() <= 0) throw std::domain_error("multiplicity of constant");
    int m = 0;
    for (;;) {
        Poly<F> q, r;
        Poly<F>::divmod(a, p, q, r);
        if (!r.is_zero()) return m;
        a = q;
        ++m;
    }
}

}  // namespace k3ff
