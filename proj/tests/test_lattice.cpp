#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "k3ff/isometry.hpp"
#include "k3ff/lattice.hpp"
#include "k3ff/roots.hpp"
#include "k3ff/rootlat.hpp"

#include <algorithm>
#include <random>

using namespace k3ff;

namespace {

ZMat random_zmat(std::mt19937& rng, size_t r, size_t c, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    ZMat m = zmat(r, c);
    for (auto& row : m)
        for (auto& x : row) x = d(rng);
    return m;
}

// brute-force enumeration of norm -n vectors inside a coordinate box
std::vector<ZVec> box_norm_vectors(const Lattice& l, long n, long box) {
    std::vector<ZVec> out;
    size_t r = l.rank();
    ZVec v(r, -box);
    while (true) {
        if (l.norm(v) == -n) out.push_back(v);
        size_t i = 0;
        while (i < r && v[i] == box) v[i++] = -box;
        if (i == r) break;
        ++v[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("hnf and snf against defining properties") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 60; ++iter) {
        size_t r = 1 + static_cast<size_t>(rng() % 5), c = 1 + static_cast<size_t>(rng() % 5);
        ZMat a = random_zmat(rng, r, c, -9, 9);

        ZMat u;
        size_t rank = 0;
        ZMat h = hnf(a, &u, &rank);
        CHECK(zmul(u, a) == h);
        mpz_class du = zdet(u);
        CHECK((du == 1 || du == -1));
        // echelon shape: pivots strictly to the right, nonnegative pivots,
        // entries above a pivot reduced
        size_t last_piv = 0;
        bool seen_zero = false;
        for (size_t i = 0; i < r; ++i) {
            size_t j = 0;
            while (j < c && h[i][j] == 0) ++j;
            if (j == c) {
                seen_zero = true;
                continue;
            }
            CHECK_FALSE(seen_zero);
            if (i > 0) CHECK(j > last_piv);
            last_piv = j;
            CHECK(h[i][j] > 0);
            for (size_t k = 0; k < i; ++k) {
                CHECK(h[k][j] >= 0);
                CHECK(h[k][j] < h[i][j]);
            }
        }

        ZMat su, sv;
        ZVec d = snf(a, &su, &sv);
        ZMat prod = zmul(zmul(su, a), sv);
        CHECK(d.size() == std::min(r, c));
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < std::min(r, c) && j < c; ++j)
                if (i != j) CHECK(prod[i][j] == 0);
        for (size_t i = 0; i < d.size(); ++i) {
            CHECK(prod[i][i] == d[i]);
            CHECK(d[i] >= 0);
            if (i + 1 < d.size() && d[i + 1] != 0) {
                CHECK(d[i] != 0);
                CHECK(d[i + 1] % d[i] == 0);
            }
        }
        mpz_class dsu = zdet(su), dsv = zdet(sv);
        CHECK((dsu == 1 || dsu == -1));
        CHECK((dsv == 1 || dsv == -1));
    }
}

TEST_CASE("kernel and saturation") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 40; ++iter) {
        size_t r = 2 + static_cast<size_t>(rng() % 4), c = 2 + static_cast<size_t>(rng() % 4);
        ZMat a = random_zmat(rng, r, c, -6, 6);
        ZMat k = left_kernel(a);
        for (const auto& x : k)
            for (size_t j = 0; j < c; ++j) CHECK(zdot(x, ztranspose(a)[j]) == 0);
        size_t rank = 0;
        hnf(a, nullptr, &rank);
        CHECK(rows(k) == r - rank);

        ZMat s = saturate_rows(a);
        CHECK(rows(s) == rank);
        // saturation contains the original rows over Q with the same rank,
        // and its own saturation is itself (index-1 check via SNF)
        ZVec ds = snf(s);
        for (const auto& d : ds)
            if (d != 0) CHECK(d == 1);
    }
}

TEST_CASE("discriminant group order equals absolute determinant") {
    std::mt19937 rng(13);
    int done = 0;
    while (done < 100) {
        size_t n = 1 + static_cast<size_t>(rng() % 4);
        ZMat g = random_zmat(rng, n, n, -5, 5);
        // symmetrize with even diagonal
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = i + 1; j < n; ++j) g[j][i] = g[i][j];
            g[i][i] = 2 * g[i][i];
        }
        if (zdet(g) == 0) continue;
        Lattice l = Lattice::from_gram(g);
        DiscForm f = discriminant_form(l);
        CHECK(f.group_order() == abs(l.det()));
        // q and b are consistent on the generators: b(g,g) = q(g) mod Z
        for (size_t i = 0; i < f.orders.size(); ++i)
            CHECK(mod_q(f.q_gen[i] - f.b_gen[i][i], 1) == 0);
        ++done;
    }
}

TEST_CASE("discriminant forms of standard root lattices") {
    // A_n: Z/(n+1) with q([1]) = -n/(n+1) mod 2Z
    for (int n : {1, 2, 3, 5, 8}) {
        DiscForm f = discriminant_form(root_lattice('A', n));
        DiscForm expect = diagonal_form({n + 1}, {mod_q(mpq_class(-n, n + 1), 2)});
        CHECK(discform_isomorphic(f, expect));
    }
    // D_l, l even: (Z/2)^2; l odd: Z/4 with q = -l/4
    {
        DiscForm f = discriminant_form(root_lattice('D', 5));
        DiscForm expect = diagonal_form({4}, {mod_q(mpq_class(-5, 4), 2)});
        CHECK(discform_isomorphic(f, expect));
    }
    {
        DiscForm f = discriminant_form(root_lattice('D', 4));
        CHECK(f.orders == std::vector<mpz_class>{2, 2});
    }
    // E6: Z/3 q = -4/3, E7: Z/2 q = -3/2, E8: trivial
    CHECK(discform_isomorphic(discriminant_form(root_lattice('E', 6)),
                              diagonal_form({3}, {mod_q(mpq_class(-4, 3), 2)})));
    CHECK(discform_isomorphic(discriminant_form(root_lattice('E', 7)),
                              diagonal_form({2}, {mod_q(mpq_class(-3, 2), 2)})));
    CHECK(discriminant_form(root_lattice('E', 8)).orders.empty());
    // the form of L and of -L are opposite: A2 disc form vs its negation
    DiscForm a2 = discriminant_form(root_lattice('A', 2));
    CHECK_FALSE(discform_isomorphic(a2, negated(a2)));
    CHECK(discform_isomorphic(negated(a2), negated(a2)));
}

TEST_CASE("glue vectors match their discriminant classes") {
    // glue vector norms reproduce the tabulated q-values
    for (int n : {2, 5, 9, 11, 17}) {
        Lattice l = root_lattice('A', n);
        QVec g = glue_vector('A', n, 1);
        QMat gv = {g};
        QMat q = qmul(qmul(gv, to_q(l.gram)), qtranspose(gv));
        CHECK(mod_q(q[0][0], 2) == mod_q(mpq_class(-n, n + 1), 2));
    }
    for (int l : {4, 5, 6, 7, 9, 10, 12, 16, 24}) {
        Lattice dl = root_lattice('D', l);
        for (int cls : {1, 2, 3}) {
            QVec g = glue_vector('D', l, cls);
            QMat gv = {g};
            QMat q = qmul(qmul(gv, to_q(dl.gram)), qtranspose(gv));
            mpq_class expect = cls == 2 ? mpq_class(-1) : frac(-l, 4);
            CHECK(mod_q(q[0][0], 2) == mod_q(expect, 2));
        }
    }
    for (int p : {6, 7}) {
        Lattice ep = root_lattice('E', p);
        QVec g = glue_vector('E', p, 1);
        QMat gv = {g};
        QMat q = qmul(qmul(gv, to_q(ep.gram)), qtranspose(gv));
        mpq_class expect = p == 6 ? mpq_class(-4, 3) : mpq_class(-3, 2);
        CHECK(mod_q(q[0][0], 2) == mod_q(expect, 2));
    }
}

TEST_CASE("root enumeration against a box oracle and serial/parallel agreement") {
    std::mt19937 rng(17);
    // known counts first
    for (auto [fam, n, cnt] : {std::tuple<char, int, long>{'A', 4, 20},
                               {'D', 4, 24},
                               {'D', 5, 40},
                               {'E', 6, 72}}) {
        Lattice l = root_lattice(fam, n);
        auto r = enumerate_roots(l);
        CHECK(static_cast<long>(r.size()) == cnt);
        CHECK(r == enumerate_roots_serial(l));
        CHECK(r == box_norm_vectors(l, 2, 4));
    }
    // random negative definite lattices of rank <= 4 via -B B^T - extra
    int done = 0;
    while (done < 25) {
        size_t n = 1 + static_cast<size_t>(rng() % 4);
        ZMat b = random_zmat(rng, n, n + 1, -2, 2);
        ZMat g = zmul(b, ztranspose(b));
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) g[i][j] = -g[i][j];
            g[i][i] -= 2;
        }
        Lattice l = Lattice::from_gram(g);
        auto fast = enumerate_roots(l);
        CHECK(fast == enumerate_roots_serial(l));
        CHECK(fast == box_norm_vectors(l, 2, 3));
        auto n4 = enumerate_norm_vectors(l, 4);
        CHECK(n4 == enumerate_norm_vectors_serial(l, 4));
        CHECK(n4 == box_norm_vectors(l, 4, 3));
        ++done;
    }
}

TEST_CASE("ade classification recovers standard lattices and sums") {
    for (auto [fam, n] : {std::pair<char, int>{'A', 1}, {'A', 5}, {'D', 4},
                          {'D', 7}, {'E', 6}, {'E', 7}, {'E', 8}}) {
        AdeSystem s = root_system(root_lattice(fam, n));
        REQUIRE(s.components.size() == 1);
        CHECK(s.components[0].family == fam);
        CHECK(s.components[0].n == n);
        // simple roots found must reproduce the abstract Cartan matrix
        Lattice amb = root_lattice(fam, n);
        Lattice sub = sublattice(amb, s.components[0].simple_roots);
        CHECK(sub.gram == root_lattice(fam, n).gram);
    }
    AdeSystem s = root_system(
        direct_sum(direct_sum(root_lattice('A', 2), root_lattice('D', 5)), root_lattice('A', 1)));
    CHECK(s.name() == "A1+A2+D5");
    CHECK(s.rank() == 8);
    // a permuted basis of D4 still classifies as D4
    Lattice d4 = root_lattice('D', 4);
    ZMat perm = {{0, 0, 1, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}};
    CHECK(root_system(sublattice(d4, perm)).name() == "D4");
}

TEST_CASE("orthogonal complements and primitivity") {
    // A2 inside E6 has complement A2 + A2
    Lattice e6 = root_lattice('E', 6);
    ZMat a2 = {{1, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}};  // e1, e3
    ZMat comp = orthogonal_complement(e6, a2);
    CHECK(rows(comp) == 4);
    Lattice c = sublattice(e6, comp);
    CHECK(root_system(c).name() == "A2+A2");
    // complement is primitive: saturation does not grow it
    ZMat sat = saturation(e6, comp);
    CHECK(rows(sat) == rows(comp));
    Lattice csat = sublattice(e6, sat);
    CHECK(abs(csat.det()) == abs(c.det()));
    // A2 inside A5 leaves A2 (root part) with discriminant 18 complement
    Lattice a5 = root_lattice('A', 5);
    ZMat a2in5 = {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}};
    Lattice c5 = sublattice(a5, orthogonal_complement(a5, a2in5));
    CHECK(root_system(c5).name() == "A2");
}

TEST_CASE("hyperbolic plane and twists") {
    Lattice u = Lattice::hyperbolic_U();
    CHECK(u.det() == -1);
    CHECK(u.is_even());
    Lattice m6 = Lattice::rank1(-6);
    CHECK(m6.gram[0][0] == -6);
    Lattice a1_2 = root_lattice('A', 1).twisted(2);
    CHECK(a1_2.gram[0][0] == -4);
}

TEST_CASE("json round trip") {
    Lattice a2 = root_lattice('A', 2);
    std::string text = lattice_to_json_text(a2);
    Lattice back = lattice_from_json_text(text);
    CHECK(back.gram == a2.gram);
    CHECK(back.labels == a2.labels);
    Lattice parsed = lattice_from_json_text(R"({"labels":["x","y"],"gram":[[2,1],[1,2]]})");
    CHECK(parsed.gram[0][1] == 1);
    CHECK_THROWS(lattice_from_json_text(R"({"gram":[[2,1]]})"));
}

TEST_CASE("hilbert symbols and rational equivalence") {
    // bilinearity spot checks at several places
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> d(-20, 20);
    for (mpz_class p : {mpz_class(0), mpz_class(2), mpz_class(3), mpz_class(5), mpz_class(7)}) {
        for (int iter = 0; iter < 30; ++iter) {
            int a = d(rng), b = d(rng), c = d(rng);
            if (!a || !b || !c) continue;
            CHECK(hilbert_symbol(a, b, p) == hilbert_symbol(b, a, p));
            CHECK(hilbert_symbol(mpq_class(a) * b, c, p) ==
                  hilbert_symbol(a, c, p) * hilbert_symbol(b, c, p));
            CHECK(hilbert_symbol(mpq_class(a) * a, b, p) == 1);
            CHECK(hilbert_symbol(a, mpq_class(-a), p) == 1);
        }
    }
    // classical values: (-1,-1) is -1 exactly at 2 and the real place
    CHECK(hilbert_symbol(-1, -1, 2) == -1);
    CHECK(hilbert_symbol(-1, -1, 0) == -1);
    CHECK(hilbert_symbol(-1, -1, 3) == 1);
    CHECK(hilbert_symbol(2, 3, 3) == -1);

    // x^2+y^2 ~ 2x^2+2y^2 but not ~ x^2+3y^2 (det classes 1 vs 3)
    QMat f1 = {{1, 0}, {0, 1}};
    QMat f2 = {{2, 0}, {0, 2}};
    QMat f3 = {{1, 0}, {0, 3}};
    CHECK(rationally_equivalent(f1, f2));
    CHECK_FALSE(rationally_equivalent(f1, f3));
    // witness for f1 ~ f2: rotate and scale, (x+y)^2 + (x-y)^2 = 2x^2+2y^2
    QMat m = {{1, 1}, {1, -1}};
    CHECK(isometry_witness_ok(f1, f2, m));
    CHECK_FALSE(isometry_witness_ok(f1, f3, m));
    // equivalence is invariant under integral change of basis
    QMat t = {{2, 5}, {1, 3}};
    CHECK(rationally_equivalent(f3, qmul(qmul(qtranspose(t), f3), t)));
    // indefinite vs definite of the same determinant class differ by signature
    QMat g1 = {{1, 0}, {0, -1}};
    CHECK_FALSE(rationally_equivalent(g1, f1));
    // both isotropic with square determinant class: equivalent
    CHECK(rationally_equivalent(g1, QMat{{3, 0}, {0, -3}}));
    // x^2 - 3y^2 does not represent 2, so it differs from 2x^2 + 2xy - y^2
    CHECK_FALSE(rationally_equivalent(QMat{{1, 0}, {0, -3}}, QMat{{2, 1}, {1, -1}}));
}

TEST_CASE("parity test for transcendental self isogeny") {
    // [2 0; 0 4]: det 8 = 2^3, no primes 3,5 mod 8 -> possible
    CHECK(bsv_self_isogeny_test({{2, 0}, {0, 4}}).self_isogeny_possible);
    // [4 2; 2 4]: det 12 = 2^2 * 3, v_3 odd -> impossible
    auto r = bsv_self_isogeny_test({{4, 2}, {2, 4}});
    CHECK_FALSE(r.self_isogeny_possible);
    CHECK(r.reason.find("3") != std::string::npos);
    // [2 0; 0 12]: det 24, v_3 = 1 odd -> impossible
    CHECK_FALSE(bsv_self_isogeny_test({{2, 0}, {0, 12}}).self_isogeny_possible);
    // [6 0; 0 12]: det 72 = 2^3 3^2 -> possible
    CHECK(bsv_self_isogeny_test({{6, 0}, {0, 12}}).self_isogeny_possible);
    // [2 1; 1 8]: det 15 = 3 * 5 both odd valuation -> impossible
    CHECK_FALSE(bsv_self_isogeny_test({{2, 1}, {1, 8}}).self_isogeny_possible);
    // odd rank
    CHECK_FALSE(bsv_self_isogeny_test({{2}}).self_isogeny_possible);
}
