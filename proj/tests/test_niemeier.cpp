#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "k3ff/niemeier.hpp"
#include "k3ff/roots.hpp"

#include <map>

using namespace k3ff;

namespace {

mpz_class glue_group_order(const NiemeierLattice& l) {
    // [L : L_root]^2 = |disc(L_root)| since L is unimodular
    QMat inv_index = {{qdet(l.basis)}};
    mpq_class d = inv_index[0][0];
    return abs(d.get_den()) / abs(d.get_num());
}

}  // namespace

TEST_CASE("all fourteen lattices build and validate") {
    // construction itself enforces integral, even and unimodular
    auto names = niemeier_names();
    CHECK(names.size() == 14);
    for (const auto& n : names) {
        NiemeierLattice l = niemeier(n);
        CHECK(l.full.rank() == 24);
        CHECK(l.full.is_even());
        mpz_class det = l.full.det();
        CHECK(abs(det) == 1);
        // index of the root lattice matches the glue group
        mpz_class disc = abs(l.root.det());
        mpz_class idx = glue_group_order(l);
        CHECK(idx * idx == disc);
    }
}

TEST_CASE("glue generators are isotropic for the discriminant form") {
    for (const auto& n : niemeier_names()) {
        NiemeierLattice l = niemeier(n);
        QMat g = to_q(l.root.gram);
        for (const auto& w : l.glue_words) {
            QVec v = l.word_vector(w);
            QMat vm = {v};
            mpq_class norm = qmul(qmul(vm, g), qtranspose(vm))[0][0];
            // glue vectors have even integral norm: the class is isotropic
            CHECK(norm.get_den() == 1);
            CHECK(norm.get_num() % 2 == 0);
        }
    }
}

TEST_CASE("component q values of the nonzero glue classes") {
    // spot checks of the class invariants used by the frame height formulas
    CHECK(mod_q(glue_contribution('A', 17, 3) * -1, 2) ==
          mod_q(frac(-3 * (18 - 3), 18), 2));
    for (int l : {4, 6, 10, 12, 16, 24})
        CHECK(glue_contribution('D', l, 2) == 1);
    for (int l : {5, 7, 9})
        CHECK(glue_contribution('D', l, 1) == frac(l, 4));
    CHECK(glue_contribution('E', 6, 1) == mpq_class(4, 3));
    CHECK(glue_contribution('E', 7, 1) == mpq_class(3, 2));
}

TEST_CASE("root systems of the full lattices match their names") {
    // enumerating norm -2 vectors of the full 24-dimensional lattice must
    // find exactly the roots of the ADE part: gluing adds no new roots
    std::map<std::string, long> expected = {
        {"E8^3", 720},     {"D16E8", 720},  {"D10E7^2", 432}, {"A17E7", 432},
        {"D24", 1104},     {"D12^2", 528},  {"D8^3", 336},    {"A15D9", 384},
        {"E6^4", 288},     {"A11D7E6", 288}, {"D6^4", 240},   {"A9^2D6", 240},
        {"A7^2D5^2", 192}, {"A5^4D4", 144}};
    for (const auto& [name, cnt] : expected) {
        NiemeierLattice l = niemeier(name);
        long direct = 0;
        for (const auto& [fam, n] : l.comps) direct += root_count(fam, n);
        CHECK(direct == cnt);
        auto roots = enumerate_roots(l.full);
        CHECK(static_cast<long>(roots.size()) == cnt);
        AdeSystem sys = ade_classify(l.full, roots);
        CHECK(sys.rank() == 24);
        std::map<std::string, int> found;
        for (const auto& c : sys.components) ++found[c.name()];
        std::map<std::string, int> want;
        for (const auto& [fam, n] : l.comps) ++want[std::string(1, fam) + std::to_string(n)];
        CHECK(found == want);
    }
}
