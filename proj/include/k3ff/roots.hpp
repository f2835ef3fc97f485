#pragma once

// Enumeration of roots (norm -2 vectors) of a negative definite lattice and
// ADE classification of the root system they span.  The enumeration kernel
// exists twice: a plain serial reference and an OpenMP version that fans the
// top branch of the Fincke-Pohst tree across threads and then restores the
// deterministic sorted order.

#include "k3ff/lattice.hpp"

#include <string>
#include <vector>

namespace k3ff {

// All v with v G v^T = -2, sorted lexicographically.  Throws when the
// lattice is not negative definite.
std::vector<ZVec> enumerate_roots_serial(const Lattice& l);
std::vector<ZVec> enumerate_roots(const Lattice& l);

// Vectors of norm -n (n > 0), same contract.
std::vector<ZVec> enumerate_norm_vectors_serial(const Lattice& l, long n);
std::vector<ZVec> enumerate_norm_vectors(const Lattice& l, long n);

struct AdeComponent {
    char family = 'A';  // 'A', 'D' or 'E'
    int n = 0;          // rank
    ZMat simple_roots;  // rows, in the ambient lattice basis, Bourbaki order

    std::string name() const { return std::string(1, family) + std::to_string(n); }
};

struct AdeSystem {
    std::vector<AdeComponent> components;  // sorted by (family, n, basis)

    // canonical name such as "A1+A1+D4+E8" (sorted)
    std::string name() const;
    int rank() const;
    bool empty() const { return components.empty(); }
};

// Classify the root system spanned by the given roots.  The roots must be
// closed under negation (as produced by enumerate_roots).  Simple roots are
// selected deterministically from the lexicographic positive system.
AdeSystem ade_classify(const Lattice& ambient, const std::vector<ZVec>& roots);

// Convenience: enumerate roots of l and classify.
AdeSystem root_system(const Lattice& l);

}  // namespace k3ff
