#include "k3ff/rootlat.hpp"

namespace k3ff {

Lattice root_lattice(char family, int n) {
    auto bad = [&]() { return lattice_error(std::string("bad root lattice ") + family + std::to_string(n)); };
    ZMat g = zmat(static_cast<size_t>(n), static_cast<size_t>(n));
    std::vector<std::string> labels;
    auto join = [&](int i, int j) {
        g[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
        g[static_cast<size_t>(j)][static_cast<size_t>(i)] = 1;
    };
    for (int i = 0; i < n; ++i) g[static_cast<size_t>(i)][static_cast<size_t>(i)] = -2;
    switch (family) {
        case 'A':
            if (n < 1) throw bad();
            for (int i = 0; i + 1 < n; ++i) join(i, i + 1);
            for (int i = 1; i <= n; ++i) labels.push_back("a" + std::to_string(i));
            break;
        case 'D':
            if (n < 4) throw bad();
            for (int i = 0; i + 1 < n - 2; ++i) join(i, i + 1);
            join(n - 3, n - 2);
            join(n - 3, n - 1);
            for (int i = 1; i <= n; ++i) labels.push_back("d" + std::to_string(i));
            break;
        case 'E':
            if (n < 6 || n > 8) throw bad();
            // chain e1-e3-e4-e5-...-en with e2 attached to e4
            join(0, 2);
            for (int i = 2; i + 1 < n; ++i) join(i, i + 1);
            join(1, 3);
            for (int i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
            break;
        default:
            throw bad();
    }
    return Lattice::from_gram(std::move(g), std::move(labels));
}

int glue_class_count(char family, int n) {
    if (family == 'A') return n + 1;
    if (family == 'D') return 4;
    if (family == 'E') return n == 6 ? 3 : n == 7 ? 2 : 1;
    throw lattice_error("bad root lattice family");
}

QVec glue_vector(char family, int n, int cls) {
    int m = glue_class_count(family, n);
    if (cls < 0 || cls >= m) throw lattice_error("glue class out of range");
    QVec v(static_cast<size_t>(n), 0);
    if (cls == 0) return v;
    if (family == 'A') {
        // [1]_n = 1/(n+1) sum (n-j+1) a_j, class k = k*[1]_n
        for (int j = 1; j <= n; ++j) v[static_cast<size_t>(j - 1)] = frac(cls * (n - j + 1), n + 1);
        return v;
    }
    if (family == 'D') {
        if (cls == 2) {
            for (int i = 1; i <= n - 2; ++i) v[static_cast<size_t>(i - 1)] = 1;
            v[static_cast<size_t>(n - 2)] = mpq_class(1, 2);
            v[static_cast<size_t>(n - 1)] = mpq_class(1, 2);
            return v;
        }
        // [1] and [3] differ by swapping the two fork coefficients
        for (int i = 1; i <= n - 2; ++i) v[static_cast<size_t>(i - 1)] = frac(i, 2);
        mpq_class c1 = frac(n - 2, 4), c2 = frac(n, 4);
        if (cls == 1) {
            v[static_cast<size_t>(n - 2)] = c1;
            v[static_cast<size_t>(n - 1)] = c2;
        } else {
            v[static_cast<size_t>(n - 2)] = c2;
            v[static_cast<size_t>(n - 1)] = c1;
        }
        return v;
    }
    // E6: eta6 = -(1/3)(2e1+3e2+4e3+6e4+5e5+4e6); E7: eta7 = -(1/2)(2e1+3e2+4e3+6e4+5e5+4e6+3e7)
    if (n == 6) {
        long c[6] = {2, 3, 4, 6, 5, 4};
        for (int i = 0; i < 6; ++i) v[static_cast<size_t>(i)] = frac(-cls * c[i], 3);
        return v;
    }
    if (n == 7) {
        long c[7] = {2, 3, 4, 6, 5, 4, 3};
        for (int i = 0; i < 7; ++i) v[static_cast<size_t>(i)] = frac(-c[i], 2);
        return v;
    }
    throw lattice_error("E8 has no nontrivial glue class");
}

long root_count(char family, int n) {
    if (family == 'A') return static_cast<long>(n) * (n + 1);
    if (family == 'D') return 2L * n * (n - 1);
    if (family == 'E') return n == 6 ? 72 : n == 7 ? 126 : 240;
    throw lattice_error("bad root lattice family");
}

mpq_class glue_contribution(char family, int n, int cls) {
    if (cls == 0) return 0;
    if (family == 'A') return frac(static_cast<long>(cls) * (n + 1 - cls), n + 1);
    if (family == 'D') return cls == 2 ? mpq_class(1) : frac(n, 4);
    if (family == 'E' && n == 6) return mpq_class(4, 3);
    if (family == 'E' && n == 7) return mpq_class(3, 2);
    throw lattice_error("no glue contribution for this class");
}

}  // namespace k3ff
