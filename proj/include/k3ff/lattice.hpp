#pragma once

// Integral lattices given by a labelled Gram matrix.  The geometric
// convention is negative definite for root lattices: roots have norm -2.

#include "k3ff/discform.hpp"
#include "k3ff/intmat.hpp"

#include <string>
#include <vector>

namespace k3ff {

class lattice_error : public std::runtime_error {
public:
    explicit lattice_error(const std::string& what) : std::runtime_error(what) {}
};

struct Lattice {
    std::vector<std::string> labels;
    ZMat gram;

    size_t rank() const { return gram.size(); }
    mpz_class det() const { return zdet(gram); }
    bool is_even() const;
    bool is_symmetric() const;

    // Norm and pairing of vectors given in basis coordinates.
    mpz_class norm(const ZVec& v) const { return zdot(v, zmulv(gram, v)); }
    mpz_class pair(const ZVec& v, const ZVec& w) const { return zdot(v, zmulv(gram, w)); }

    static Lattice from_gram(ZMat g, std::vector<std::string> labels = {});
    static Lattice hyperbolic_U();
    static Lattice rank1(long n, const std::string& label = "");
    Lattice twisted(long n) const;
};

Lattice direct_sum(const Lattice& a, const Lattice& b);

// Sublattice spanned by rows (coordinates in the ambient basis); its Gram is
// B G B^T.
Lattice sublattice(const Lattice& amb, const ZMat& basis_rows);

// Basis rows of the orthogonal complement of the row span of S in L
// (automatically primitive in L).
ZMat orthogonal_complement(const Lattice& l, const ZMat& s_rows);

// Saturation of the row span of S inside L.
ZMat saturation(const Lattice& l, const ZMat& s_rows);

// Discriminant group L*/L with its torsion quadratic form q mod 2Z and
// bilinear form b mod Z; requires a nondegenerate even lattice.
DiscForm discriminant_form(const Lattice& l);

// JSON round trip per the catalog interchange format
// {"labels": [...], "gram": [[...]]}.
Lattice lattice_from_json_text(const std::string& text);
std::string lattice_to_json_text(const Lattice& l);

}  // namespace k3ff
