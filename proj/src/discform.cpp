#include "k3ff/discform.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace k3ff {

mpq_class mod_q(const mpq_class& v, long m) {
    mpq_class r = v;
    r.canonicalize();  // tolerate unreduced two-argument constructions
    mpz_class num = r.get_num(), den = r.get_den();
    // r mod m = r - m*floor(r/m)
    mpz_class q;
    mpz_class md = mpz_class(m) * den;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), md.get_mpz_t());
    r -= mpq_class(q) * m;
    return r;
}

mpq_class DiscForm::q(const std::vector<long>& e) const {
    mpq_class acc = 0;
    for (size_t i = 0; i < orders.size(); ++i) {
        acc += mpq_class(e[i]) * mpq_class(e[i]) * q_gen[i];
        for (size_t j = i + 1; j < orders.size(); ++j) acc += 2 * mpq_class(e[i]) * mpq_class(e[j]) * b_gen[i][j];
    }
    return mod_q(acc, 2);
}

mpq_class DiscForm::b(const std::vector<long>& e, const std::vector<long>& f) const {
    mpq_class acc = 0;
    for (size_t i = 0; i < orders.size(); ++i)
        for (size_t j = 0; j < orders.size(); ++j) acc += mpq_class(e[i]) * mpq_class(f[j]) * b_gen[i][j];
    return mod_q(acc, 1);
}

std::string DiscForm::str() const {
    if (orders.empty()) return "trivial";
    std::string s;
    for (size_t i = 0; i < orders.size(); ++i) {
        if (i) s += " + ";
        s += "Z/" + orders[i].get_str() + "(" + q_gen[i].get_str() + ")";
    }
    return s;
}

DiscForm diagonal_form(const std::vector<long>& orders, const std::vector<mpq_class>& qvals) {
    DiscForm f;
    f.b_gen = qmat(orders.size(), orders.size());
    for (size_t i = 0; i < orders.size(); ++i) {
        f.orders.emplace_back(orders[i]);
        f.q_gen.push_back(mod_q(qvals[i], 2));
        f.b_gen[i][i] = mod_q(qvals[i], 1);  // b(g,g) = q(g) mod 1 for even lattices
    }
    return f;
}

namespace {

struct Elt {
    std::vector<long> e;
};

// enumerate all elements of the group
std::vector<std::vector<long>> all_elements(const DiscForm& f) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur(f.orders.size(), 0);
    for (;;) {
        out.push_back(cur);
        size_t i = 0;
        while (i < cur.size()) {
            if (++cur[i] < f.orders[i]) break;
            cur[i] = 0;
            ++i;
        }
        if (i == cur.size()) break;
        if (cur.empty()) break;
    }
    if (f.orders.empty()) out = {{}};
    return out;
}

long element_order(const DiscForm& f, const std::vector<long>& e) {
    long o = 1;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        mpz_class d = f.orders[i];
        mpz_class g;
        mpz_class ei(e[i]);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), ei.get_mpz_t());
        long oi = mpz_class(d / g).get_si();
        o = std::lcm(o, oi);
    }
    return o;
}

}  // namespace

bool discform_isomorphic(const DiscForm& a, const DiscForm& b) {
    if (a.group_order() != b.group_order()) return false;
    // invariant factors of the underlying groups must match
    {
        auto inv = [](const DiscForm& f) {
            std::vector<mpz_class> v = f.orders;
            std::sort(v.begin(), v.end());
            return v;
        };
        // note: orders as stored may not be in invariant-factor form when the
        // form was assembled by hand, so compare full multisets of element
        // orders instead
        std::map<long, size_t> ca, cb;
        for (const auto& e : all_elements(a)) ++ca[element_order(a, e)];
        for (const auto& e : all_elements(b)) ++cb[element_order(b, e)];
        if (ca != cb) return false;
        (void)inv;
    }
    auto elems_b = all_elements(b);
    // q-value histograms must agree
    {
        std::map<mpq_class, size_t> ha, hb;
        for (const auto& e : all_elements(a)) ++ha[a.q(e)];
        for (const auto& e : elems_b) ++hb[b.q(e)];
        if (ha != hb) return false;
    }
    // backtracking: map each generator of a to an element of b with the same
    // order and q-value, preserving pairwise b-values, then check bijectivity
    size_t n = a.orders.size();
    std::vector<std::vector<long>> img(n);
    std::vector<size_t> choice(n, 0);

    std::function<bool(size_t)> place = [&](size_t i) -> bool {
        if (i == n) {
            // images must generate: count distinct elements produced
            std::map<std::vector<long>, bool> seen;
            std::vector<std::vector<long>> frontier = {std::vector<long>(b.orders.size(), 0)};
            seen[frontier[0]] = true;
            // closure under adding generators' images
            bool grown = true;
            while (grown) {
                grown = false;
                std::vector<std::vector<long>> cur;
                for (const auto& kv : seen) cur.push_back(kv.first);
                for (const auto& x : cur)
                    for (size_t g = 0; g < n; ++g) {
                        std::vector<long> y(b.orders.size());
                        for (size_t k = 0; k < y.size(); ++k)
                            y[k] = static_cast<long>((x[k] + img[g][k]) % b.orders[k].get_si());
                        if (!seen.count(y)) {
                            seen[y] = true;
                            grown = true;
                        }
                    }
            }
            return mpz_class(seen.size()) == b.group_order();
        }
        std::vector<long> ea(n, 0);
        ea[i] = 1;
        long oa = element_order(a, ea);
        mpq_class qa = a.q_gen[i];
        for (const auto& cand : elems_b) {
            if (element_order(b, cand) != oa) continue;
            if (b.q(cand) != mod_q(qa, 2)) continue;
            bool ok = true;
            for (size_t j = 0; j < i && ok; ++j) {
                std::vector<long> ej(n, 0);
                ej[j] = 1;
                if (b.b(img[j], cand) != a.b(ej, ea)) ok = false;
            }
            if (!ok) continue;
            img[i] = cand;
            if (place(i + 1)) return true;
        }
        return false;
    };
    return place(0);
}

DiscForm negated(const DiscForm& a) {
    DiscForm f = a;
    for (auto& q : f.q_gen) q = mod_q(-q, 2);
    for (auto& row : f.b_gen)
        for (auto& v : row) v = mod_q(-v, 1);
    return f;
}

}  // namespace k3ff
