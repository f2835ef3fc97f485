#pragma once

// ADE root lattices in Bourbaki numbering, negative definite convention
// (roots have norm -2, joined vertices pair to +1), together with their
// standard dual glue vectors.

#include "k3ff/lattice.hpp"

#include <string>

namespace k3ff {

// family is 'A', 'D' or 'E'; n the rank (D needs n >= 4, E needs 6..8)
Lattice root_lattice(char family, int n);

// number of glue classes: n+1 for A_n, 4 for D_l, 3 for E6, 2 for E7, 1 for E8
int glue_class_count(char family, int n);

// Dual glue vector of the given class in root-basis coordinates:
//   A_n: class k is k*[1]_n
//   D_l: classes 1,2,3 are [1], [2], [3] as usual (class 0 is the origin)
//   E6:  class k is k*eta6;  E7: class 1 is eta7
QVec glue_vector(char family, int n, int cls);

// roots in one component: n(n+1), 2l(l-1), 72/126/240
long root_count(char family, int n);

// fiber contribution of a section meeting the non-identity component of the
// given glue class: k(n+1-k)/(n+1) for A_n, l/4 or 1 for D_l, 4/3 and 3/2
// for E6/E7 (E8 has no nontrivial class)
mpq_class glue_contribution(char family, int n, int cls);

}  // namespace k3ff
