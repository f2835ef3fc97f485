#pragma once

// Scalars of the coefficient field K, where K is either Q or a quadratic
// extension Q(sqrt(D)) with D a squarefree integer (possibly negative).
// An element is stored as a + b*sqrt(D).  Plain rationals carry D == 1 and
// b == 0, so values from different contexts mix freely as long as at most
// one nontrivial D is involved.  Mixing two distinct nontrivial D is a
// usage error and throws.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace k3ff {

class field_error : public std::runtime_error {
public:
    explicit field_error(const std::string& what) : std::runtime_error(what) {}
};

class Scalar {
public:
    Scalar() : a_(0), b_(0), d_(1) {}
    Scalar(long v) : a_(v), b_(0), d_(1) {}
    Scalar(const mpq_class& v) : a_(v), b_(0), d_(1) {}
    Scalar(const mpz_class& v) : a_(v), b_(0), d_(1) {}
    Scalar(mpq_class a, mpq_class b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        if (b_ == 0) d_ = 1;
        if (d_ == 1 && b_ != 0) throw field_error("sqrt(1) coefficient must be folded into the rational part");
    }

    static Scalar sqrt_gen(std::int64_t d) { return Scalar(0, 1, d); }

    const mpq_class& rat() const { return a_; }
    const mpq_class& irr() const { return b_; }
    std::int64_t disc() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    // Returns the common discriminant tag of two operands, throwing when the
    // operands live in genuinely different quadratic fields.
    static std::int64_t join(std::int64_t x, std::int64_t y) {
        if (x == y) return x;
        if (x == 1) return y;
        if (y == 1) return x;
        throw field_error("cannot mix Q(sqrt(" + std::to_string(x) + ")) with Q(sqrt(" + std::to_string(y) + "))");
    }

    Scalar operator-() const { return Scalar(-a_, -b_, d_); }

    Scalar& operator+=(const Scalar& o) {
        d_ = join(d_, o.d_);
        a_ += o.a_;
        b_ += o.b_;
        if (b_ == 0) d_ = 1;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) { return *this += (-o); }

    Scalar& operator*=(const Scalar& o) {
        std::int64_t d = join(d_, o.d_);
        mpq_class a = a_ * o.a_ + mpq_class(d) * b_ * o.b_;
        mpq_class b = a_ * o.b_ + b_ * o.a_;
        a_ = a;
        b_ = b;
        d_ = (b_ == 0) ? 1 : d;
        return *this;
    }

    Scalar conj() const { return Scalar(a_, -b_, d_); }

    // Field norm a^2 - D b^2, a rational number.
    mpq_class norm() const { return a_ * a_ - mpq_class(d_) * b_ * b_; }

    Scalar inverse() const {
        if (is_zero()) throw field_error("division by zero scalar");
        mpq_class n = norm();
        if (n == 0) throw field_error("norm zero in quadratic field, D is not squarefree");
        return Scalar(a_ / n, -b_ / n, d_);
    }

    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    // Square root within the same field when it exists: either a rational
    // square or D times a rational square.  Returns false when no square
    // root exists in K.
    bool sqrt_in_field(Scalar& out) const;

    std::string str() const;

private:
    mpq_class a_, b_;
    std::int64_t d_;
};

std::string rat_str(const mpq_class& q);

}  // namespace k3ff
