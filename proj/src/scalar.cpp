#include "k3ff/scalar.hpp"

namespace k3ff {

std::string rat_str(const mpq_class& q) {
    return q.get_str();
}

static bool mpq_sqrt(const mpq_class& q, mpq_class& out) {
    if (q < 0) return false;
    if (q == 0) {
        out = 0;
        return true;
    }
    mpz_class num = q.get_num(), den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    out = mpq_class(rn) / mpq_class(rd);
    return true;
}

bool Scalar::sqrt_in_field(Scalar& out) const {
    if (b_ != 0) {
        // sqrt(a + b r) stays in K only when a^2 - D b^2 is a rational
        // square n^2, giving sqrt = x + y r with x^2 = (a + n)/2 or (a - n)/2.
        mpq_class n;
        if (!mpq_sqrt(norm(), n)) return false;
        for (int sign = 0; sign < 2; ++sign) {
            mpq_class x2 = (a_ + (sign ? -n : n)) / 2;
            mpq_class x;
            if (!mpq_sqrt(x2, x)) continue;
            if (x == 0) continue;
            mpq_class y = b_ / (2 * x);
            Scalar cand(x, y, d_);
            if (cand * cand == *this) {
                out = cand;
                return true;
            }
        }
        return false;
    }
    mpq_class r;
    if (mpq_sqrt(a_, r)) {
        out = Scalar(r);
        return true;
    }
    if (d_ != 1) {
        // maybe a == D * y^2, so sqrt = y * sqrt(D)
        mpq_class y2 = a_ / mpq_class(d_);
        if (mpq_sqrt(y2, r)) {
            out = Scalar(0, r, d_);
            return true;
        }
    }
    // Plain rationals may still have a root of the form y*sqrt(D) for the
    // ambient field, but with no ambient tag recorded here we cannot guess D.
    return false;
}

std::string Scalar::str() const {
    if (b_ == 0) return rat_str(a_);
    std::string s;
    if (a_ != 0) s += rat_str(a_) + (b_ > 0 ? "+" : "");
    if (b_ == 1)
        s += "r";
    else if (b_ == -1)
        s += "-r";
    else
        s += rat_str(b_) + "*r";
    return s;
}

}  // namespace k3ff
