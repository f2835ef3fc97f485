#pragma once

// Concrete coefficient tower used throughout:
//   K      = Q or Q(sqrt(D))          (Scalar)
//   K(s)   = rational functions in s  (KS)
//   K(s)[t] and K(s)(t) on top        (TPoly, KT)
// The base parameter s is transcendental by default; specialization to a
// value happens only through explicit substitution helpers.

#include "k3ff/poly.hpp"
#include "k3ff/ratfunc.hpp"
#include "k3ff/scalar.hpp"

#include <functional>
#include <string>

namespace k3ff {

using SPoly = Poly<Scalar>;
using KS = RatFunc<Scalar>;
using TPoly = Poly<KS>;
using KT = RatFunc<KS>;

inline KS var_s() { return KS::var(); }
inline KT var_t() { return KT::var(); }
inline KT kt(long v) { return KT(v); }
inline KT kt(const KS& v) { return KT(TPoly(v)); }

// Substitute t -> g(t) in f, staying in K(s)(t).
KT substitute_t(const KT& f, const KT& g);

// Substitute s -> value in f; the result lives in K(t).
KT substitute_s(const KT& f, const Scalar& value);
KS substitute_s(const KS& f, const Scalar& value);

// Substitute t -> 1/t (the standard chart swap for the place at infinity).
inline KT flip_t(const KT& f) { return substitute_t(f, KT(1) / var_t()); }

// Square root of a rational function in K(s)(t) when one exists there.
// All odd-multiplicity factors must pair up and the leading constant must be
// a square in K.  Returns false when no square root exists in the tower.
bool sqrt_in_tower(const KT& f, KT& out);

std::string str(const Scalar& x);
std::string str(const SPoly& p);
std::string str(const KS& f);
std::string str(const TPoly& p);
std::string str(const KT& f);

}  // namespace k3ff
