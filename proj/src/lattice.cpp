#include "k3ff/lattice.hpp"

#include <json.hpp>

namespace k3ff {

bool Lattice::is_symmetric() const {
    for (size_t i = 0; i < rank(); ++i)
        for (size_t j = i + 1; j < rank(); ++j)
            if (gram[i][j] != gram[j][i]) return false;
    return true;
}

bool Lattice::is_even() const {
    for (size_t i = 0; i < rank(); ++i)
        if (gram[i][i] % 2 != 0) return false;
    return true;
}

Lattice Lattice::from_gram(ZMat g, std::vector<std::string> labels) {
    Lattice l;
    l.gram = std::move(g);
    if (labels.empty())
        for (size_t i = 0; i < l.rank(); ++i) labels.push_back("v" + std::to_string(i + 1));
    if (labels.size() != l.rank()) throw lattice_error("label count does not match rank");
    l.labels = std::move(labels);
    if (!l.is_symmetric()) throw lattice_error("Gram matrix is not symmetric");
    return l;
}

Lattice Lattice::hyperbolic_U() {
    ZMat g = zmat(2, 2);
    g[0][1] = 1;
    g[1][0] = 1;
    return from_gram(g, {"e", "f"});
}

Lattice Lattice::rank1(long n, const std::string& label) {
    ZMat g = zmat(1, 1);
    g[0][0] = n;
    return from_gram(g, {label.empty() ? "<" + std::to_string(n) + ">" : label});
}

Lattice Lattice::twisted(long n) const {
    Lattice l = *this;
    for (auto& row : l.gram)
        for (auto& e : row) e *= n;
    return l;
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
    size_t n = a.rank(), m = b.rank();
    Lattice l;
    l.gram = zmat(n + m, n + m);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) l.gram[i][j] = a.gram[i][j];
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) l.gram[n + i][n + j] = b.gram[i][j];
    l.labels = a.labels;
    l.labels.insert(l.labels.end(), b.labels.begin(), b.labels.end());
    return l;
}

Lattice sublattice(const Lattice& amb, const ZMat& basis_rows) {
    for (const auto& r : basis_rows)
        if (r.size() != amb.rank()) throw lattice_error("sublattice basis has wrong ambient dimension");
    ZMat g = zmul(zmul(basis_rows, amb.gram), ztranspose(basis_rows));
    std::vector<std::string> labels;
    for (size_t i = 0; i < basis_rows.size(); ++i) labels.push_back("w" + std::to_string(i + 1));
    return Lattice::from_gram(std::move(g), std::move(labels));
}

ZMat orthogonal_complement(const Lattice& l, const ZMat& s_rows) {
    if (s_rows.empty()) return zidentity(l.rank());
    ZMat m = zmul(l.gram, ztranspose(s_rows));  // n x k
    return left_kernel(m);
}

ZMat saturation(const Lattice& l, const ZMat& s_rows) {
    (void)l;
    return saturate_rows(s_rows);
}

DiscForm discriminant_form(const Lattice& l) {
    if (!l.is_even()) throw lattice_error("discriminant form requires an even lattice");
    if (l.det() == 0) throw lattice_error("discriminant form requires a nondegenerate lattice");
    ZMat u, v;
    ZVec d = snf(l.gram, &u, &v);
    DiscForm f;
    std::vector<QVec> gens;  // coordinates in the lattice basis
    for (size_t i = 0; i < d.size(); ++i) {
        if (d[i] <= 1) continue;
        QVec g(l.rank(), 0);
        for (size_t r = 0; r < l.rank(); ++r) g[r] = mpq_class(v[r][i]) / mpq_class(d[i]);
        gens.push_back(std::move(g));
        f.orders.push_back(d[i]);
    }
    QMat gq = to_q(l.gram);
    auto pairing = [&](const QVec& a, const QVec& b) {
        mpq_class s = 0;
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) s += a[i] * gq[i][j] * b[j];
        return s;
    };
    f.b_gen = qmat(gens.size(), gens.size());
    for (size_t i = 0; i < gens.size(); ++i) {
        f.q_gen.push_back(mod_q(pairing(gens[i], gens[i]), 2));
        for (size_t j = 0; j < gens.size(); ++j) f.b_gen[i][j] = mod_q(pairing(gens[i], gens[j]), 1);
    }
    return f;
}

Lattice lattice_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Lattice l;
    for (const auto& lab : j.at("labels")) l.labels.push_back(lab.get<std::string>());
    for (const auto& row : j.at("gram")) {
        ZVec r;
        for (const auto& e : row) r.emplace_back(e.get<long>());
        l.gram.push_back(std::move(r));
    }
    if (l.labels.size() != l.rank()) throw lattice_error("labels/gram size mismatch in JSON lattice");
    for (const auto& row : l.gram)
        if (row.size() != l.rank()) throw lattice_error("non-square Gram matrix in JSON lattice");
    if (!l.is_symmetric()) throw lattice_error("asymmetric Gram matrix in JSON lattice");
    return l;
}

std::string lattice_to_json_text(const Lattice& l) {
    nlohmann::json j;
    j["labels"] = l.labels;
    nlohmann::json g = nlohmann::json::array();
    for (const auto& row : l.gram) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& e : row) r.push_back(e.get_si());
        g.push_back(r);
    }
    j["gram"] = g;
    return j.dump(2);
}

}  // namespace k3ff
