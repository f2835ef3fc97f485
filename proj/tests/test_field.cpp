#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "k3ff/expr.hpp"
#include "k3ff/tower.hpp"

#include <random>

using namespace k3ff;

TEST_CASE("quadratic scalar arithmetic") {
    Scalar r2 = Scalar::sqrt_gen(2);
    CHECK(r2 * r2 == Scalar(2));
    Scalar x = Scalar(3) + Scalar(mpq_class(1, 2)) * r2;  // 3 + r/2
    Scalar y = x * x;                                     // 19/2 + 3r
    CHECK(y == Scalar(mpq_class(19, 2), 3, 2));
    CHECK(x * x.inverse() == Scalar(1));
    CHECK(x.conj() * x == Scalar(x.norm()));

    Scalar i = Scalar::sqrt_gen(-1);
    CHECK(i * i == Scalar(-1));
    CHECK_THROWS_AS(r2 + i, field_error);

    Scalar root;
    CHECK(Scalar(mpq_class(9, 4)).sqrt_in_field(root));
    CHECK(root * root == Scalar(mpq_class(9, 4)));
    // 3 + 2 sqrt(2) = (1 + sqrt 2)^2
    Scalar v(3, 2, 2);
    CHECK(v.sqrt_in_field(root));
    CHECK(root * root == v);
    CHECK_FALSE(Scalar(2).sqrt_in_field(root));
}

TEST_CASE("polynomial division and gcd over Q") {
    using P = Poly<Scalar>;
    P t = P::var();
    P a = (t - P(1)) * (t - P(1)) * (t + P(3));
    P b = (t - P(1)) * (t + P(5));
    CHECK(gcd(a, b) == (t - P(1)));
    P q, r;
    P::divmod(a, b, q, r);
    CHECK(q * b + r == a);

    P u, v;
    P g = ext_gcd(a, b, u, v);
    CHECK(u * a + v * b == g);
}

TEST_CASE("rational function normalization") {
    KS s = var_s();
    KS f = (s * s - KS(1)) / (s - KS(1));
    CHECK(f == s + KS(1));
    KS g = (s + KS(2)) / (KS(2) * s);
    CHECK(g.den().lead() == Scalar(1));
    CHECK(g * g.inverse() == KS(1));
}

TEST_CASE("tower substitution and valuations") {
    KT t = var_t();
    KT s = kt(var_s());
    KT f = (t * t - s * s) / t;
    // place t - s
    TPoly place = (t - s).num();
    CHECK(f.valuation(place) == 1);
    CHECK(f.valuation(t.num()) == -1);
    CHECK(f.valuation_inf() == -1);

    KT g = substitute_t(f, KT(1) / t);
    CHECK(g == (KT(1) - s * s * t * t) / t);

    KT h = substitute_s(f, Scalar(3));
    CHECK(h == (t * t - KT(9)) / t);
}

TEST_CASE("expression parser") {
    KT t = var_t();
    KT s = kt(var_s());
    CHECK(parse_expr("t^3 - 2*t + 5") == t * t * t - KT(2) * t + KT(5));
    CHECK(parse_expr("(s + 1/s)*t") == (s + KT(1) / s) * t);
    CHECK(parse_expr("-t^2/(4*s)") == -(t * t) / (KT(4) * s));
    KT r = parse_expr("r*r", 2);
    CHECK(r == KT(2));
    CHECK_THROWS_AS(parse_expr("r", 1), parse_error);
    CHECK_THROWS_AS(parse_expr("t +"), parse_error);
    CHECK(parse_expr("2^-1*t") == t / KT(2));
}

TEST_CASE("square roots in the tower") {
    KT t = var_t();
    KT s = kt(var_s());
    KT sq = ((t - s) * (t - s) * (t + KT(1)) * (t + KT(1))) / (KT(9) * s * s);
    KT root;
    CHECK(sqrt_in_tower(sq, root));
    CHECK(root * root == sq);
    CHECK_FALSE(sqrt_in_tower(t, root));
}

TEST_CASE("squarefree reconstruction property, 200 random cases") {
    std::mt19937 rng(20240817u);
    auto rand_poly = [&](int maxdeg) {
        std::uniform_int_distribution<int> dd(1, maxdeg), dc(-4, 4);
        int d = dd(rng);
        std::vector<Scalar> cs;
        for (int i = 0; i <= d; ++i) cs.emplace_back(dc(rng));
        cs.back() = Scalar(1);  // keep monic so factors are comparable
        return Poly<Scalar>(std::move(cs));
    };
    int nontrivial = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> de(1, 3), dn(1, 3);
        int n = dn(rng);
        Poly<Scalar> prod(1);
        for (int i = 0; i < n; ++i) {
            Poly<Scalar> f = rand_poly(3);
            prod = prod * f.pow(static_cast<unsigned>(de(rng)));
        }
        auto layers = squarefree_decompose(prod);
        // reconstruct and compare against the product (both monic)
        Poly<Scalar> back(1);
        for (size_t i = 0; i < layers.size(); ++i) back = back * layers[i].pow(static_cast<unsigned>(i + 1));
        CHECK(back == prod.monic());
        // layers are squarefree and pairwise coprime
        for (size_t i = 0; i < layers.size(); ++i) {
            if (layers[i].deg() <= 0) continue;
            ++nontrivial;
            CHECK(gcd(layers[i], layers[i].derivative()).deg() == 0);
            for (size_t j = i + 1; j < layers.size(); ++j)
                if (layers[j].deg() > 0) CHECK(gcd(layers[i], layers[j]).deg() == 0);
        }
    }
    CHECK(nontrivial > 100);
}
