#include "k3ff/roots.hpp"

#include <algorithm>
#include <map>
#include <set>

#ifdef K3FF_HAVE_OPENMP
#include <omp.h>
#endif

namespace k3ff {

namespace {

struct FPData {
    size_t n;
    QMat q;  // q[i][i] pivots, q[i][j] (j > i) off-diagonal multipliers
};

// Decompose the positive definite form A as sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2.
FPData fp_decompose(const Lattice& l) {
    size_t n = l.rank();
    QMat a = to_q(l.gram);
    for (auto& row : a)
        for (auto& e : row) e = -e;  // negative definite geometric convention
    FPData d;
    d.n = n;
    d.q = qmat(n, n);
    for (size_t i = 0; i < n; ++i) {
        mpq_class piv = a[i][i];
        for (size_t k = 0; k < i; ++k) piv -= d.q[k][k] * d.q[k][i] * d.q[k][i];
        if (piv <= 0) throw lattice_error("lattice is not negative definite");
        d.q[i][i] = piv;
        for (size_t j = i + 1; j < n; ++j) {
            mpq_class v = a[i][j];
            for (size_t k = 0; k < i; ++k) v -= d.q[k][k] * d.q[k][i] * d.q[k][j];
            d.q[i][j] = v / piv;
        }
    }
    return d;
}

// Recursive enumeration over coordinates i = n-1 .. 0.  c_i and rem are the
// accumulated offset and remaining norm budget.
// admissible window [lo, hi) of integer values v with piv*(v+c)^2 <= rem;
// the window is contiguous and contains floor(-c) or ceil(-c) when nonempty
void fp_window(const mpq_class& piv, const mpq_class& c, const mpq_class& rem, long& lo, long& hi) {
    auto fits = [&](long v) {
        mpq_class t = mpq_class(v) + c;
        return piv * t * t <= rem;
    };
    mpq_class mc = -c;
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), mc.get_num().get_mpz_t(), mc.get_den().get_mpz_t());
    long center = f.get_si();
    lo = center;
    hi = center + 1;
    if (!fits(center) && !fits(center + 1)) {
        hi = lo;  // empty
        return;
    }
    if (!fits(center)) {
        lo = center + 1;
        hi = center + 2;
    }
    while (fits(lo - 1)) --lo;
    while (fits(hi)) ++hi;
}

void fp_descend(const FPData& d, size_t i, const QVec& partial_c, const mpq_class& rem, ZVec& x,
                const mpq_class& target, std::vector<ZVec>& out) {
    const mpq_class& piv = d.q[i][i];
    const mpq_class& c = partial_c[i];
    long lo, hi;
    fp_window(piv, c, rem, lo, hi);
    // candidates are lo .. hi-1
    for (long v = lo; v < hi; ++v) {
        x[i] = v;
        mpq_class t = mpq_class(v) + c;
        mpq_class used = piv * t * t;
        mpq_class rem2 = rem - used;
        if (i == 0) {
            if (rem2 == 0) out.push_back(x);
            continue;
        }
        QVec c2 = partial_c;
        for (size_t j = 0; j < i; ++j) c2[j] += d.q[j][i] * v;
        fp_descend(d, i - 1, c2, rem2, x, target, out);
    }
    x[i] = 0;
}

std::vector<ZVec> fp_all(const Lattice& l, long norm, bool parallel) {
    size_t n = l.rank();
    if (n == 0) return {};
    FPData d = fp_decompose(l);
    mpq_class target(norm);
    // collect branch prefixes down to a fan-out depth, then finish each
    // prefix independently
    struct Prefix {
        ZVec x;
        QVec c;
        mpq_class rem;
        size_t next;  // next coordinate to fill (counting down)
    };
    std::vector<Prefix> work;
    {
        Prefix root;
        root.x.assign(n, 0);
        root.c.assign(n, 0);
        root.rem = target;
        root.next = n;  // nothing fixed yet
        work.push_back(root);
    }
    size_t fan_depth = 0;
#ifdef K3FF_HAVE_OPENMP
    if (parallel && n > 2) {
        size_t want = static_cast<size_t>(4 * omp_get_max_threads());
        while (fan_depth < n - 1 && work.size() < want) {
            std::vector<Prefix> next_work;
            for (const auto& p : work) {
                size_t i = p.next - 1;
                const mpq_class& piv = d.q[i][i];
                const mpq_class& c = p.c[i];
                long lo, hi;
                fp_window(piv, c, p.rem, lo, hi);
                for (long v = lo; v < hi; ++v) {
                    Prefix q = p;
                    q.x[i] = v;
                    mpq_class t = mpq_class(v) + c;
                    q.rem = p.rem - piv * t * t;
                    for (size_t j = 0; j < i; ++j) q.c[j] += d.q[j][i] * v;
                    q.next = i;
                    next_work.push_back(std::move(q));
                }
            }
            work = std::move(next_work);
            ++fan_depth;
            if (work.empty()) break;
        }
    }
#else
    (void)parallel;
#endif
    std::vector<ZVec> out;
    if (fan_depth == 0) {
        ZVec x(n, 0);
        fp_descend(d, n - 1, QVec(n, 0), target, x, target, out);
    } else {
        std::vector<std::vector<ZVec>> buckets(work.size());
#ifdef K3FF_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long long w = 0; w < static_cast<long long>(work.size()); ++w) {
            Prefix& p = work[static_cast<size_t>(w)];
            if (p.next == 0) {
                if (p.rem == 0) buckets[static_cast<size_t>(w)].push_back(p.x);
                continue;
            }
            ZVec x = p.x;
            fp_descend(d, p.next - 1, p.c, p.rem, x, target, buckets[static_cast<size_t>(w)]);
        }
        for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

// fp_descend with nonnegative leading coordinate only finds half the
// vectors; completing under negation keeps the search tree small.  The
// symmetric closure is restored here.
std::vector<ZVec> with_negatives(std::vector<ZVec> half, size_t n) {
    std::vector<ZVec> out;
    out.reserve(half.size() * 2);
    for (const auto& v : half) {
        ZVec neg(n);
        for (size_t i = 0; i < n; ++i) neg[i] = -v[i];
        out.push_back(v);
        out.push_back(std::move(neg));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::vector<ZVec> enumerate_norm_vectors_serial(const Lattice& l, long n) {
    if (!l.is_symmetric()) throw lattice_error("Gram matrix is not symmetric");
    return with_negatives(fp_all(l, n, false), l.rank());
}

std::vector<ZVec> enumerate_norm_vectors(const Lattice& l, long n) {
    if (!l.is_symmetric()) throw lattice_error("Gram matrix is not symmetric");
    return with_negatives(fp_all(l, n, true), l.rank());
}

std::vector<ZVec> enumerate_roots_serial(const Lattice& l) { return enumerate_norm_vectors_serial(l, 2); }
std::vector<ZVec> enumerate_roots(const Lattice& l) { return enumerate_norm_vectors(l, 2); }

std::string AdeSystem::name() const {
    if (components.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < components.size(); ++i) {
        if (i) s += "+";
        s += components[i].name();
    }
    return s;
}

int AdeSystem::rank() const {
    int r = 0;
    for (const auto& c : components) r += c.n;
    return r;
}

namespace {

// order the simple roots of one component into Bourbaki numbering
AdeComponent order_component(const Lattice& amb, std::vector<ZVec> simples) {
    size_t k = simples.size();
    auto adj = [&](size_t i, size_t j) { return amb.pair(simples[i], simples[j]) != 0; };
    std::vector<std::vector<size_t>> nb(k);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
            if (i != j && adj(i, j)) nb[i].push_back(j);
    size_t branch = k;
    for (size_t i = 0; i < k; ++i)
        if (nb[i].size() > 2) {
            if (branch != k) throw lattice_error("root component with two branch vertices");
            branch = i;
        }
    AdeComponent comp;
    comp.n = static_cast<int>(k);
    auto walk_arm = [&](size_t start, size_t from) {
        std::vector<size_t> arm = {start};
        size_t prev = from, cur = start;
        for (;;) {
            size_t next = k;
            for (size_t m : nb[cur])
                if (m != prev) next = m;
            if (next == k) break;
            arm.push_back(next);
            prev = cur;
            cur = next;
        }
        return arm;
    };
    if (branch == k) {
        // path: A_n
        comp.family = 'A';
        std::vector<size_t> ends;
        for (size_t i = 0; i < k; ++i)
            if (nb[i].size() <= 1) ends.push_back(i);
        size_t start = ends[0];
        if (ends.size() == 2 && simples[ends[1]] < simples[ends[0]]) start = ends[1];
        std::vector<size_t> order = k == 1 ? std::vector<size_t>{start} : walk_arm(start, k);
        for (size_t i : order) comp.simple_roots.push_back(simples[i]);
        return comp;
    }
    std::vector<std::vector<size_t>> arms;
    for (size_t m : nb[branch]) arms.push_back(walk_arm(m, branch));
    std::sort(arms.begin(), arms.end(), [&](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return simples[a[0]] < simples[b[0]];
    });
    size_t a0 = arms[0].size(), a1 = arms[1].size(), a2 = arms[2].size();
    if (a0 == 1 && a1 == 1) {
        // D_l: long arm reversed becomes d1..d_{l-3}, then branch, then the
        // two short arms
        comp.family = 'D';
        std::vector<size_t> order;
        for (auto it = arms[2].rbegin(); it != arms[2].rend(); ++it) order.push_back(*it);
        order.push_back(branch);
        order.push_back(arms[0][0]);
        order.push_back(arms[1][0]);
        for (size_t i : order) comp.simple_roots.push_back(simples[i]);
        return comp;
    }
    if (a0 == 1 && a1 == 2 && a2 <= 4) {
        // E6, E7, E8: e1,e3 from the 2-arm (outer first), e2 the short arm,
        // e4 the branch, then the long arm
        comp.family = 'E';
        std::vector<size_t> order;
        order.push_back(arms[1][1]);
        order.push_back(arms[0][0]);
        order.push_back(arms[1][0]);
        order.push_back(branch);
        for (size_t i : arms[2]) order.push_back(i);
        std::vector<size_t> fixed = {order[0], order[1], order[2], order[3]};
        // Bourbaki: e1 e2 e3 e4 then e5.. ; order currently e1,e2,e3,e4,...
        for (size_t i : order) comp.simple_roots.push_back(simples[i]);
        (void)fixed;
        return comp;
    }
    throw lattice_error("root component is not of ADE shape");
}

}  // namespace

AdeSystem ade_classify(const Lattice& ambient, const std::vector<ZVec>& roots) {
    AdeSystem sys;
    if (roots.empty()) return sys;
    std::set<ZVec> pos;
    for (const auto& r : roots) {
        bool positive = false;
        for (const auto& c : r)
            if (c != 0) {
                positive = c > 0;
                break;
            }
        if (positive) pos.insert(r);
    }
    // simple roots: positive roots that are not the sum of two positive roots
    std::vector<ZVec> simples;
    for (const auto& r : pos) {
        bool decomposable = false;
        for (const auto& p : pos) {
            ZVec q(r.size());
            for (size_t i = 0; i < r.size(); ++i) q[i] = r[i] - p[i];
            if (pos.count(q)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simples.push_back(r);
    }
    for (size_t i = 0; i < simples.size(); ++i)
        for (size_t j = i + 1; j < simples.size(); ++j) {
            mpz_class p = ambient.pair(simples[i], simples[j]);
            if (p != 0 && p != 1) throw lattice_error("simple roots with non-ADE pairing " + p.get_str());
        }
    // split into connected components
    size_t k = simples.size();
    std::vector<int> comp(k, -1);
    int nc = 0;
    for (size_t i = 0; i < k; ++i) {
        if (comp[i] != -1) continue;
        std::vector<size_t> stack = {i};
        comp[i] = nc;
        while (!stack.empty()) {
            size_t c = stack.back();
            stack.pop_back();
            for (size_t j = 0; j < k; ++j)
                if (comp[j] == -1 && ambient.pair(simples[c], simples[j]) != 0) {
                    comp[j] = nc;
                    stack.push_back(j);
                }
        }
        ++nc;
    }
    std::vector<std::vector<ZVec>> groups(nc);
    for (size_t i = 0; i < k; ++i) groups[static_cast<size_t>(comp[i])].push_back(simples[i]);
    for (auto& g : groups) sys.components.push_back(order_component(ambient, std::move(g)));
    std::sort(sys.components.begin(), sys.components.end(), [](const AdeComponent& a, const AdeComponent& b) {
        if (a.family != b.family) return a.family < b.family;
        if (a.n != b.n) return a.n < b.n;
        return a.simple_roots < b.simple_roots;
    });
    // consistency: an ADE system of this shape must account for every root
    long expect = 0;
    for (const auto& c : sys.components) {
        if (c.family == 'A') expect += static_cast<long>(c.n) * (c.n + 1);
        if (c.family == 'D') expect += 2L * c.n * (c.n - 1);
        if (c.family == 'E') expect += c.n == 6 ? 72 : c.n == 7 ? 126 : 240;
    }
    if (expect != static_cast<long>(roots.size()))
        throw lattice_error("root count mismatch against ADE classification");
    return sys;
}

AdeSystem root_system(const Lattice& l) { return ade_classify(l, enumerate_roots(l)); }

}  // namespace k3ff
