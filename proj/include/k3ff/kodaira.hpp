#pragma once

// Kodaira fiber classification for elliptic fibrations over the t-line with
// coefficients in the exact tower, via valuations of (c4, c6, disc) after
// local minimalization.

#include "k3ff/wcurve.hpp"

#include <string>
#include <vector>

namespace k3ff {

// A closed place of the t-line: a monic squarefree polynomial, or t = infinity.
struct Place {
    bool at_inf = false;
    TPoly p;  // monic, squarefree, positive degree when finite

    static Place infinity() {
        Place pl;
        pl.at_inf = true;
        return pl;
    }
    static Place finite(const TPoly& poly) {
        Place pl;
        pl.p = poly.monic();
        return pl;
    }
    int degree() const { return at_inf ? 1 : p.deg(); }
    std::string str() const;
};

enum class FiberClass { I, Istar, II, III, IV, IVstar, IIIstar, IIstar };

struct KodairaFiber {
    Place place;
    FiberClass cls = FiberClass::I;
    int n = 0;     // index for I_n / I_n^*
    int shift = 0; // minimalization exponent applied locally

    std::string type_str() const;  // "I4", "I2*", "III*", ...
    int euler() const;             // Euler number of one geometric fiber
    int components() const;        // number of irreducible components
    int simple_components() const; // components of multiplicity one
    bool is_good() const { return cls == FiberClass::I && n == 0; }
};

// Classify the fiber of the curve at one place.
KodairaFiber kodaira_type_at(const WeierstrassCurve& c, const Place& place);

struct FibrationReport {
    std::vector<KodairaFiber> fibers;  // bad fibers only
    int euler_total = 0;               // sum over geometric fibers

    // canonical configuration string, e.g. "2I4*+4I1" (counts are geometric)
    std::string config() const;
    // configuration with the places spelled out
    std::string config_with_places() const;
};

// Locate all bad fibers: places dividing disc, c4 or c6 (numerators and
// denominators, refined to a pairwise-coprime basis) plus t = infinity.
FibrationReport fiber_configuration(const WeierstrassCurve& c);

// Caches the squarefree factorizations of c4, c6 and disc once so that
// valuations at many places reduce to divisibility tests.  extra rational
// functions (e.g. section coordinates) may contribute additional places.
class FiberScanner {
public:
    explicit FiberScanner(const WeierstrassCurve& c, const std::vector<KT>& extra = {});
    const std::vector<TPoly>& basis() const { return basis_; }
    KodairaFiber at(const TPoly& place) const;
    KodairaFiber at_infinity() const;

private:
    long val(int which, const TPoly& place) const;
    const WeierstrassCurve& curve_;
    // (squarefree factor, signed multiplicity) lists for c4, c6, disc
    std::vector<std::pair<TPoly, long>> parts_[3];
    bool zero_[3] = {false, false, false};
    std::vector<TPoly> basis_;
};

// Pairwise-coprime refinement of a set of monic polynomials; every input is a
// product of powers of basis elements.
std::vector<TPoly> gcd_free_basis(std::vector<TPoly> in);

}  // namespace k3ff
