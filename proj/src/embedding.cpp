#include "k3ff/embedding.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace k3ff {

namespace {

mpq_class frac_part(const mpq_class& x) {
    mpq_class r = mod_q(x, 1);
    return r;
}

}  // namespace

Lattice m_shape(const std::string& name) {
    Lattice m;
    std::stringstream ss(name);
    std::string part;
    int idx = 0;
    while (std::getline(ss, part, '+')) {
        if (part.size() < 2) throw lattice_error("bad shape factor " + part);
        char fam = part[0];
        int n = std::stoi(part.substr(1));
        Lattice f = root_lattice(fam, n);
        ++idx;
        for (auto& lab : f.labels) lab += "." + std::to_string(idx);
        m = m.rank() == 0 ? f : direct_sum(m, f);
    }
    if (m.rank() == 0) throw lattice_error("empty shape " + name);
    return m;
}

void validate_embedding(const NiemeierLattice& l, const EmbeddingEntry& e) {
    Lattice m = m_shape(e.m);
    if (rows(e.images) != m.rank() || (rows(e.images) && cols(e.images) != 24))
        throw lattice_error("entry " + e.id + ": image matrix has wrong shape");
    // Gram match
    for (size_t i = 0; i < m.rank(); ++i)
        for (size_t j = 0; j < m.rank(); ++j)
            if (l.root.pair(e.images[i], e.images[j]) != m.gram[i][j])
                throw lattice_error("entry " + e.id + ": image Gram mismatch at (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
    // primitivity inside L: coordinates w.r.t. the basis of L must be integral
    // with trivial Smith form
    QMat bq = l.basis;
    ZMat coords;
    for (size_t i = 0; i < m.rank(); ++i) {
        QVec b(24), x;
        for (size_t j = 0; j < 24; ++j) b[j] = e.images[i][j];
        if (!solve_left(bq, b, x)) throw lattice_error("entry " + e.id + ": image outside L");
        ZVec row(24);
        for (size_t j = 0; j < 24; ++j) {
            if (x[j].get_den() != 1) throw lattice_error("entry " + e.id + ": image outside L");
            row[j] = x[j].get_num();
        }
        coords.push_back(row);
    }
    for (const auto& d : snf(coords))
        if (d != 0 && d != 1)
            throw lattice_error("entry " + e.id + ": non-primitive image (index " + d.get_str() + ")");
}

FibrationFrame fibration_frame(const NiemeierLattice& l, const EmbeddingEntry& e) {
    validate_embedding(l, e);
    FibrationFrame f;
    f.N = sublattice(l.root, orthogonal_complement(l.root, e.images));
    // W: kernel of the pairing of L-basis vectors against the images
    QMat pq = qmul(qmul(l.basis, to_q(l.root.gram)), qtranspose(to_q(e.images)));
    ZMat p = zmat(pq.size(), pq.empty() ? 0 : pq[0].size());
    for (size_t i = 0; i < pq.size(); ++i)
        for (size_t j = 0; j < pq[i].size(); ++j) {
            if (pq[i][j].get_den() != 1) throw lattice_error("non-integral pairing in frame");
            p[i][j] = pq[i][j].get_num();
        }
    ZMat k = left_kernel(p);
    f.W = sublattice(l.full, k);
    f.w_basis = qmul(to_q(k), l.basis);
    auto roots = enumerate_roots(f.W);
    f.n_root = ade_classify(f.W, roots);
    f.mw_rank = static_cast<int>(f.W.rank()) - f.n_root.rank();
    // torsion: saturation of the span of the simple roots inside W
    ZMat r;
    for (const auto& c : f.n_root.components)
        for (const auto& row : c.simple_roots) r.push_back(row);
    if (!r.empty()) {
        ZMat s = saturate_rows(r);
        QMat sq = to_q(s);
        ZMat a;
        for (const auto& row : r) {
            QVec b(row.size()), x;
            for (size_t j = 0; j < row.size(); ++j) b[j] = row[j];
            if (!solve_left(sq, b, x)) throw lattice_error("saturation solve failed");
            ZVec arow(x.size());
            for (size_t j = 0; j < x.size(); ++j) {
                if (x[j].get_den() != 1) throw lattice_error("saturation not over Z");
                arow[j] = x[j].get_num();
            }
            a.push_back(arow);
        }
        for (const auto& d : snf(a))
            if (d > 1) f.torsion.push_back(d);
    }
    return f;
}

mpq_class frame_height(const FibrationFrame& f, int n, const QVec& v_root,
                       std::vector<mpq_class>* contributions) {
    // v must lie in W x Q; express it in the basis of W
    QVec x;
    if (!solve_left(f.w_basis, v_root, x))
        throw lattice_error("section vector is not orthogonal to the embedded lattice");
    QMat gw = to_q(f.W.gram);
    mpq_class total = 0;
    if (contributions) contributions->clear();
    for (const auto& c : f.n_root.components) {
        // pairing of v with the simple roots, then dual coordinates
        size_t r = rows(c.simple_roots);
        QMat sq = to_q(c.simple_roots);
        QMat gc = qmul(qmul(sq, gw), qtranspose(sq));
        QVec p(r);
        for (size_t i = 0; i < r; ++i) {
            mpq_class acc = 0;
            for (size_t a = 0; a < x.size(); ++a)
                for (size_t b = 0; b < x.size(); ++b) acc += x[a] * gw[a][b] * sq[i][b];
            p[i] = acc;
        }
        QVec y;
        if (!solve_left(qtranspose(gc), p, y)) throw lattice_error("component projection failed");
        // identify the discriminant class of the projection
        int cls = -1;
        int m = glue_class_count(c.family, c.n);
        for (int k = 0; k < m && cls < 0; ++k) {
            QVec g = glue_vector(c.family, c.n, k);
            bool ok = true;
            for (size_t i = 0; i < r; ++i)
                if (frac_part(y[i] - g[i]) != 0) ok = false;
            if (ok) cls = k;
        }
        if (cls < 0) throw lattice_error("section does not project to a glue class of " + c.name());
        mpq_class contr = cls == 0 ? mpq_class(0) : glue_contribution(c.family, c.n, cls);
        if (contributions) contributions->push_back(contr);
        total += contr;
    }
    return mpq_class(4) + 2 * (n - 2) - total;
}

std::string torsion_str(const std::vector<mpz_class>& t) {
    if (t.empty()) return "(0)";
    std::string s;
    for (const auto& d : t) {
        if (!s.empty()) s += "+";
        s += "Z/" + d.get_str();
    }
    return s;
}

std::vector<EmbeddingEntry> embeddings_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<EmbeddingEntry> out;
    for (const auto& je : j) {
        EmbeddingEntry e;
        e.id = je.at("id").get<std::string>();
        e.target = je.at("target").get<std::string>();
        e.m = je.at("M").get<std::string>();
        for (const auto& row : je.at("images")) {
            ZVec v;
            for (const auto& x : row) v.push_back(x.get<long>());
            e.images.push_back(v);
        }
        e.provenance = je.value("provenance", "");
        const auto& ex = je.at("expected");
        e.expect_fibers = ex.at("fibers").get<std::string>();
        e.expect_rank = ex.at("rank").get<int>();
        for (const auto& x : ex.at("torsion")) e.expect_torsion.push_back(x.get<long>());
        out.push_back(std::move(e));
    }
    return out;
}

std::string embeddings_to_json_text(const std::vector<EmbeddingEntry>& v) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& e : v) {
        nlohmann::json je;
        je["id"] = e.id;
        je["target"] = e.target;
        je["M"] = e.m;
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : e.images) {
            nlohmann::json r = nlohmann::json::array();
            for (const auto& x : row) r.push_back(x.get_si());
            rows.push_back(r);
        }
        je["images"] = rows;
        je["provenance"] = e.provenance;
        je["expected"] = {{"fibers", e.expect_fibers},
                          {"rank", e.expect_rank},
                          {"torsion", e.expect_torsion}};
        j.push_back(je);
    }
    return j.dump(1);
}

}  // namespace k3ff
