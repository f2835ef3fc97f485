#pragma once

// Fibration frames from primitive embeddings of a negative definite lattice
// M into a Niemeier lattice L: the complements N (in the root lattice) and
// W (in L), the ADE type of the roots of W, the Mordell-Weil rank and the
// torsion group, plus heights of sections written as n*F + O + v.

#include "k3ff/niemeier.hpp"
#include "k3ff/roots.hpp"

#include <string>
#include <vector>

namespace k3ff {

// "A2+D5", "A1+D5", "A1+A1+A5": basis ordered left to right, each factor in
// the basis order of root_lattice().
Lattice m_shape(const std::string& name);

struct EmbeddingEntry {
    std::string id;          // catalog key, e.g. "17" or "8bis" or "20-j"
    std::string target;      // Niemeier table key, e.g. "A15D9"
    std::string m;           // shape name
    ZMat images;             // one row per basis vector of M, in root coords
    std::string provenance;  // free-text derivation note

    // printed row this entry must reproduce
    std::string expect_fibers;  // canonical sorted ADE name, e.g. "A15"
    int expect_rank = 0;
    std::vector<long> expect_torsion;  // invariant factors, ascending
};

struct FibrationFrame {
    Lattice N;       // orthogonal complement of the images in L_root
    Lattice W;       // orthogonal complement in L
    QMat w_basis;    // rows: basis of W in root coordinates
    AdeSystem n_root;  // root system of W (= roots of N)
    int mw_rank = 0;
    std::vector<mpz_class> torsion;  // invariant factors > 1
};

// Gram and primitivity validation; throws lattice_error with diagnostics.
void validate_embedding(const NiemeierLattice& l, const EmbeddingEntry& e);

FibrationFrame fibration_frame(const NiemeierLattice& l, const EmbeddingEntry& e);

// Height of the section n*F + O + v for v in W (root coordinates):
// 4 + 2(n-2) minus the sum of local contributions, one per component of
// N_root, each determined by the discriminant class v induces on it.
// Also returns the per-component contributions in component order.
mpq_class frame_height(const FibrationFrame& f, int n, const QVec& v_root,
                       std::vector<mpq_class>* contributions = nullptr);

// Catalog I/O: array of entries as JSON.
std::vector<EmbeddingEntry> embeddings_from_json_text(const std::string& text);
std::string embeddings_to_json_text(const std::vector<EmbeddingEntry>& v);

std::string torsion_str(const std::vector<mpz_class>& t);

}  // namespace k3ff
