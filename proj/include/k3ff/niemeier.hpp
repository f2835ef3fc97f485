#pragma once

// Niemeier lattices assembled from their root lattices and glue codes.
// Vectors of Ni(R) are represented by rational coordinates in the root
// basis; the lattice itself carries an integral basis matrix over that
// coordinate system.

#include "k3ff/lattice.hpp"
#include "k3ff/rootlat.hpp"

#include <string>
#include <vector>

namespace k3ff {

struct NiemeierLattice {
    std::string name;                          // e.g. "Ni(A17E7)"
    std::vector<std::pair<char, int>> comps;   // ordered root components
    std::vector<size_t> offsets;               // column offset of each component
    Lattice root;                              // the 24x24 root Gram (block diagonal)
    QMat basis;                                // 24 rows, basis of L in root coordinates
    Lattice full;                              // Gram of that basis (unimodular, even)
    std::vector<std::vector<int>> glue_words;  // generator words, one class per component

    size_t comp_index_at(size_t col) const;
    // glue vector of one generator word, in root coordinates
    QVec word_vector(const std::vector<int>& word) const;
};

// Names accepted: the 13 table entries such as "E8^3", "D16E8", "A5^4D4", in
// the standard multiplicative notation used below.
NiemeierLattice niemeier(const std::string& name);

std::vector<std::string> niemeier_names();

}  // namespace k3ff
