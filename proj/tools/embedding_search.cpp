// Reconstructs the embedding catalogs: for every cataloged fibration row it
// assembles candidate images of M from standard per-factor embeddings (plus a
// few explicit combined ones), validates them, computes the frame, and keeps
// the first candidate reproducing the expected (fibers, rank, torsion) row.
// Outputs JSON catalogs consumed by the library and the CLI.

#include "k3ff/embedding.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>

using namespace k3ff;

namespace {

struct PartSpec {
    std::string shape;  // "A1", "A2", "D5", "A5", "A1+A1", "A2+D5", "A1+D5", "A1+A1+A5"
    char fam;           // family of the hosting factor
    int n;              // rank of the hosting factor
};

struct RowSpec {
    std::string id;
    std::string target;
    std::string m;  // full shape of M
    std::vector<PartSpec> parts;
    std::string fibers;
    int rank = 0;
    std::vector<long> torsion;
};

ZVec unit24(size_t i) {
    ZVec v(24, 0);
    v[i] = 1;
    return v;
}

// a set of image rows inside one factor, offsets applied later
using Rows = std::vector<std::vector<std::pair<long, int>>>;  // coeff, local index (1-based)

ZMat place(const Rows& rows, size_t off) {
    ZMat out;
    for (const auto& r : rows) {
        ZVec v(24, 0);
        for (const auto& [c, i] : r) v[off + static_cast<size_t>(i - 1)] += c;
        out.push_back(v);
    }
    return out;
}

Rows simple(std::initializer_list<int> idx) {
    Rows r;
    for (int i : idx) r.push_back({{1, i}});
    return r;
}

// D5 in the top five nodes of D_l, ordered to match root_lattice('D', 5)
Rows d5_top(int l) { return simple({l - 4, l - 3, l - 2, l - 1, l}); }

// a root orthogonal to the standard D5 inside E7 (the highest root) or E8
Rows e_d5_orthogonal_root(int n) {
    Rows r;
    if (n == 7)
        r.push_back({{2, 1}, {2, 2}, {3, 3}, {4, 4}, {3, 5}, {2, 6}, {1, 7}});
    else
        r.push_back({{1, 8}});
    return r;
}

// candidate image sets for a part inside a factor (fam, n)
std::vector<Rows> part_candidates(const std::string& shape, char fam, int n) {
    std::vector<Rows> cands;
    if (shape == "A1") {
        if (fam == 'A') cands.push_back(simple({1}));
        if (fam == 'D') cands.push_back(simple({n}));
        if (fam == 'E') cands.push_back(simple({1}));
    } else if (shape == "A2") {
        if (fam == 'A') cands.push_back(simple({1, 2}));
        if (fam == 'D') cands.push_back(simple({n, n - 2}));
        if (fam == 'E') cands.push_back(simple({1, 3}));
    } else if (shape == "D5") {
        if (fam == 'D' && n >= 5) cands.push_back(d5_top(n));
        if (fam == 'E') cands.push_back(simple({6, 5, 4, 2, 3}));
    } else if (shape == "A5") {
        if (fam == 'A' && n == 5) cands.push_back(simple({1, 2, 3, 4, 5}));
        if (fam == 'E' && n == 7) cands.push_back(simple({2, 4, 5, 6, 7}));
        if (fam == 'D' && n == 8) cands.push_back(simple({8, 6, 5, 4, 3}));
        if (fam == 'D' && n == 10) cands.push_back(simple({10, 8, 7, 6, 5}));
    } else if (shape == "A1+A1") {
        if (fam == 'D' && n == 10) cands.push_back(simple({10, 7}));
        if (fam == 'D' && n == 8) cands.push_back(simple({8, 1}));
        if (fam == 'D' && n == 4) {
            cands.push_back(simple({4, 1}));
            cands.push_back(simple({3, 1}));
            cands.push_back(simple({4, 3}));
        }
    } else if (shape == "A2+D5") {
        if (fam == 'D' && n >= 8) {
            Rows r = simple({n - 7, n - 6});
            for (const auto& x : d5_top(n)) r.push_back(x);
            cands.push_back(r);
        }
        // fam == 'E' (E8) handled separately with a derived candidate
    } else if (shape == "A1+D5") {
        if (fam == 'D' && n >= 7) {
            Rows r = simple({n - 6});
            for (const auto& x : d5_top(n)) r.push_back(x);
            cands.push_back(r);
        }
        if (fam == 'E' && n >= 7) {
            Rows r = e_d5_orthogonal_root(n);
            for (const auto& x : simple({6, 5, 4, 2, 3})) r.push_back(x);
            cands.push_back(r);
        }
    } else if (shape == "A1+A1+A5") {
        if (fam == 'D' && n == 10) {
            Rows r;
            r.push_back({{1, 10}, {1, 9}, {2, 8}, {2, 7}, {2, 6}, {2, 5}, {2, 4}, {1, 3}});
            r.push_back({{1, 3}});
            for (const auto& x : simple({10, 8, 7, 6, 5})) r.push_back(x);
            cands.push_back(r);
        }
    }
    return cands;
}

// A2+D5 inside E8 as the complement of a primitive norm -12 vector
ZMat a2d5_in_e8(size_t off) {
    Lattice e8 = root_lattice('E', 8);
    ZMat v = {{6, 9, 12, 18, 15, 12, 8, 4}};
    Lattice comp = sublattice(e8, orthogonal_complement(e8, v));
    AdeSystem sys = root_system(comp);
    if (sys.name() != "A2+D5") throw lattice_error("unexpected complement in E8: " + sys.name());
    ZMat cb = orthogonal_complement(e8, v);
    ZMat out;
    for (const auto& c : sys.components)
        for (const auto& row : c.simple_roots) {
            // row is in comp coordinates; lift to E8 then to the 24 columns
            ZVec amb(24, 0);
            for (size_t j = 0; j < 8; ++j) {
                mpz_class acc = 0;
                for (size_t i = 0; i < row.size(); ++i) acc += row[i] * cb[i][j];
                amb[off + j] = acc;
            }
            out.push_back(amb);
        }
    return out;
}

bool frame_matches(const FibrationFrame& f, const RowSpec& row) {
    if (f.n_root.name() != row.fibers) return false;
    if (f.mw_rank != row.rank) return false;
    if (f.torsion.size() != row.torsion.size()) return false;
    for (size_t i = 0; i < f.torsion.size(); ++i)
        if (f.torsion[i] != row.torsion[i]) return false;
    return true;
}

std::optional<EmbeddingEntry> solve_row(const NiemeierLattice& l, const RowSpec& row) {
    // all injective assignments of parts to factors of matching type
    size_t np = row.parts.size();
    std::vector<size_t> assign(np);
    std::vector<bool> used(l.comps.size(), false);
    std::optional<EmbeddingEntry> found;

    std::function<bool(size_t)> rec = [&](size_t p) -> bool {
        if (p == np) {
            // build candidate image stacks (cartesian product over parts)
            std::vector<std::vector<ZMat>> per_part;
            for (size_t i = 0; i < np; ++i) {
                const PartSpec& ps = row.parts[i];
                size_t off = l.offsets[assign[i]];
                std::vector<ZMat> mats;
                if (ps.shape == "A2+D5" && ps.fam == 'E')
                    mats.push_back(a2d5_in_e8(off));
                else
                    for (const auto& r : part_candidates(ps.shape, ps.fam, ps.n))
                        mats.push_back(place(r, off));
                if (mats.empty()) return false;
                per_part.push_back(std::move(mats));
            }
            std::vector<size_t> pick(np, 0);
            while (true) {
                EmbeddingEntry e;
                e.id = row.id;
                e.target = row.target;
                e.m = row.m;
                for (size_t i = 0; i < np; ++i)
                    for (const auto& r : per_part[i][pick[i]]) e.images.push_back(r);
                e.expect_fibers = row.fibers;
                e.expect_rank = row.rank;
                e.expect_torsion = row.torsion;
                try {
                    FibrationFrame f = fibration_frame(l, e);
                    if (frame_matches(f, row)) {
                        found = e;
                        return true;
                    }
                    if (getenv("K3FF_EMB_DEBUG"))
                        std::cerr << "  row " << row.id << ": got " << f.n_root.name() << " rk "
                                  << f.mw_rank << " tors " << torsion_str(f.torsion) << "\n";
                } catch (const lattice_error& err) {
                    if (getenv("K3FF_EMB_DEBUG"))
                        std::cerr << "  row " << row.id << ": rejected: " << err.what() << "\n";
                }
                size_t i = 0;
                while (i < np && ++pick[i] == per_part[i].size()) pick[i++] = 0;
                if (i == np) break;
            }
            return false;
        }
        for (size_t c = 0; c < l.comps.size(); ++c) {
            if (used[c]) continue;
            if (l.comps[c].first != row.parts[p].fam || l.comps[c].second != row.parts[p].n) continue;
            used[c] = true;
            assign[p] = c;
            if (rec(p + 1)) return true;
            used[c] = false;
        }
        return false;
    };
    rec(0);
    return found;
}

std::vector<PartSpec> parts(std::initializer_list<PartSpec> l) { return l; }

}  // namespace

int main(int argc, char** argv) {
    std::string outdir = argc > 1 ? argv[1] : "data";

    std::vector<RowSpec> table_y = {
        {"1", "E8^3", "A2+D5", parts({{"A2", 'E', 8}, {"D5", 'E', 8}}), "A3+E6+E8", 0, {}},
        {"2", "E8^3", "A2+D5", parts({{"A2+D5", 'E', 8}}), "E8+E8", 1, {}},
        {"3", "D16E8", "A2+D5", parts({{"A2", 'E', 8}, {"D5", 'D', 16}}), "D11+E6", 0, {}},
        {"4", "D16E8", "A2+D5", parts({{"A2+D5", 'E', 8}}), "D16", 1, {2}},
        {"5", "D16E8", "A2+D5", parts({{"A2", 'D', 16}, {"D5", 'E', 8}}), "A3+D13", 1, {}},
        {"6", "D16E8", "A2+D5", parts({{"A2+D5", 'D', 16}}), "D8+E8", 1, {}},
        {"7", "D10E7^2", "A2+D5", parts({{"A2", 'E', 7}, {"D5", 'D', 10}}), "A5+D5+E7", 0, {2}},
        {"8", "D10E7^2", "A2+D5", parts({{"A2", 'E', 7}, {"D5", 'E', 7}}), "A1+A5+D10", 1, {2}},
        {"9", "D10E7^2", "A2+D5", parts({{"A2+D5", 'D', 10}}), "A1+A1+E7+E7", 1, {2}},
        {"10", "D10E7^2", "A2+D5", parts({{"A2", 'D', 10}, {"D5", 'E', 7}}), "A1+D7+E7", 2, {}},
        {"11", "A17E7", "A2+D5", parts({{"A2", 'A', 17}, {"D5", 'E', 7}}), "A1+A14", 2, {}},
        {"12", "D24", "A2+D5", parts({{"A2+D5", 'D', 24}}), "D16", 1, {}},
        {"13", "D12^2", "A2+D5", parts({{"A2", 'D', 12}, {"D5", 'D', 12}}), "D7+D9", 1, {}},
        {"14", "D12^2", "A2+D5", parts({{"A2+D5", 'D', 12}}), "D4+D12", 1, {2}},
        {"15", "D8^3", "A2+D5", parts({{"A2", 'D', 8}, {"D5", 'D', 8}}), "A3+D5+D8", 1, {2}},
        {"16", "D8^3", "A2+D5", parts({{"A2+D5", 'D', 8}}), "D8+D8", 1, {2}},
        {"17", "A15D9", "A2+D5", parts({{"A2+D5", 'D', 9}}), "A15", 2, {2}},
        {"18", "A15D9", "A2+D5", parts({{"A2", 'A', 15}, {"D5", 'D', 9}}), "A12+D4", 1, {}},
        {"19", "E6^4", "A2+D5", parts({{"A2", 'E', 6}, {"D5", 'E', 6}}), "A2+A2+E6+E6", 1, {3}},
        {"20", "A11D7E6", "A2+D5", parts({{"A2", 'E', 6}, {"D5", 'D', 7}}), "A1+A1+A2+A2+A11", 0, {6}},
        {"21", "A11D7E6", "A2+D5", parts({{"A2", 'A', 11}, {"D5", 'D', 7}}), "A1+A1+A8+E6", 1, {}},
        {"22", "A11D7E6", "A2+D5", parts({{"A2", 'A', 11}, {"D5", 'E', 6}}), "A8+D7", 2, {}},
        {"23", "A11D7E6", "A2+D5", parts({{"A2", 'D', 7}, {"D5", 'E', 6}}), "A11+D4", 2, {2}},
        {"24", "D6^4", "A2+D5", parts({{"A2", 'D', 6}, {"D5", 'D', 6}}), "A3+D6+D6", 2, {2}},
        {"25", "A9^2D6", "A2+D5", parts({{"A2", 'A', 9}, {"D5", 'D', 6}}), "A6+A9", 2, {}},
        {"26", "A7^2D5^2", "A2+D5", parts({{"A2", 'D', 5}, {"D5", 'D', 5}}), "A1+A1+A7+A7", 1, {4}},
        {"27", "A7^2D5^2", "A2+D5", parts({{"A2", 'A', 7}, {"D5", 'D', 5}}), "A4+A7+D5", 1, {}},
    };

    std::vector<RowSpec> table_y2 = {
        {"1", "E8^3", "A1+D5", parts({{"A1", 'E', 8}, {"D5", 'E', 8}}), "A3+E7+E8", 0, {}},
        {"2", "E8^3", "A1+D5", parts({{"A1+D5", 'E', 8}}), "A1+E8+E8", 1, {}},
        {"3", "D16E8", "A1+D5", parts({{"A1", 'E', 8}, {"D5", 'D', 16}}), "D11+E7", 0, {}},
        {"4", "D16E8", "A1+D5", parts({{"A1+D5", 'E', 8}}), "A1+D16", 1, {2}},
        {"5", "D16E8", "A1+D5", parts({{"A1", 'D', 16}, {"D5", 'E', 8}}), "A1+A3+D14", 0, {2}},
        {"6", "D16E8", "A1+D5", parts({{"A1+D5", 'D', 16}}), "A1+D9+E8", 0, {}},
        {"7", "D10E7^2", "A1+D5", parts({{"A1", 'E', 7}, {"D5", 'D', 10}}), "D5+D6+E7", 0, {2}},
        {"8", "D10E7^2", "A1+D5", parts({{"A1", 'E', 7}, {"D5", 'E', 7}}), "A1+D6+D10", 1, {2}},
        {"8bis", "D10E7^2", "A1+D5", parts({{"A1+D5", 'E', 7}}), "D10+E7", 1, {2}},
        {"9", "D10E7^2", "A1+D5", parts({{"A1+D5", 'D', 10}}), "A1+A3+E7+E7", 0, {2}},
        {"10", "D10E7^2", "A1+D5", parts({{"A1", 'D', 10}, {"D5", 'E', 7}}), "A1+A1+D8+E7", 1, {2}},
        {"21-c", "A17E7", "A1+D5", parts({{"A1+D5", 'E', 7}}), "A17", 1, {3}},
        {"11", "A17E7", "A1+D5", parts({{"A1", 'A', 17}, {"D5", 'E', 7}}), "A1+A15", 2, {}},
        {"12", "D24", "A1+D5", parts({{"A1+D5", 'D', 24}}), "A1+D17", 0, {}},
        {"13", "D12^2", "A1+D5", parts({{"A1", 'D', 12}, {"D5", 'D', 12}}), "A1+D7+D10", 0, {2}},
        {"14", "D12^2", "A1+D5", parts({{"A1+D5", 'D', 12}}), "A1+D5+D12", 0, {2}},
        {"15", "D8^3", "A1+D5", parts({{"A1", 'D', 8}, {"D5", 'D', 8}}), "A1+A3+D6+D8", 0, {2, 2}},
        {"16", "D8^3", "A1+D5", parts({{"A1+D5", 'D', 8}}), "A1+D8+D8", 1, {2}},
        {"17", "A15D9", "A1+D5", parts({{"A1+D5", 'D', 9}}), "A1+A1+A1+A15", 0, {4}},
        {"18", "A15D9", "A1+D5", parts({{"A1", 'A', 15}, {"D5", 'D', 9}}), "A13+D4", 1, {}},
        {"19", "E6^4", "A1+D5", parts({{"A1", 'E', 6}, {"D5", 'E', 6}}), "A5+E6+E6", 1, {3}},
        {"20", "A11D7E6", "A1+D5", parts({{"A1", 'E', 6}, {"D5", 'D', 7}}), "A1+A1+A5+A11", 0, {6}},
        {"21", "A11D7E6", "A1+D5", parts({{"A1", 'A', 11}, {"D5", 'D', 7}}), "A1+A1+A9+E6", 1, {}},
        {"20-j", "A11D7E6", "A1+D5", parts({{"A1+D5", 'D', 7}}), "A1+A11+E6", 0, {3}},
        {"22", "A11D7E6", "A1+D5", parts({{"A1", 'A', 11}, {"D5", 'E', 6}}), "A9+D7", 2, {}},
        {"23", "A11D7E6", "A1+D5", parts({{"A1", 'D', 7}, {"D5", 'E', 6}}), "A1+A11+D5", 1, {4}},
        {"24", "D6^4", "A1+D5", parts({{"A1", 'D', 6}, {"D5", 'D', 6}}), "A1+D4+D6+D6", 1, {2, 2}},
        {"25", "A9^2D6", "A1+D5", parts({{"A1", 'A', 9}, {"D5", 'D', 6}}), "A7+A9", 2, {}},
        {"26", "A7^2D5^2", "A1+D5", parts({{"A1", 'D', 5}, {"D5", 'D', 5}}), "A1+A3+A7+A7", 0, {8}},
        {"27", "A7^2D5^2", "A1+D5", parts({{"A1", 'A', 7}, {"D5", 'D', 5}}), "A5+A7+D5", 1, {}},
    };

    std::vector<RowSpec> table_s = {
        {"7-i", "D10E7^2", "A1+A1+A5", parts({{"A1+A1", 'D', 10}, {"A5", 'E', 7}}),
         "A1+A1+A2+D6+E7", 0, {2}},
        {"9-i", "D10E7^2", "A1+A1+A5", parts({{"A1+A1+A5", 'D', 10}}), "A1+A1+E7+E7", 1, {2}},
        {"14-i", "D8^3", "A1+A1+A5", parts({{"A1+A1", 'D', 8}, {"A5", 'D', 8}}),
         "A1+A1+A1+A1+D4+D8", 1, {2, 2}},
        // two single A1 parts in separate factors; reuse the pair shape split
        {"15-i", "D8^3", "A1+A1+A5", parts({{"A1", 'D', 8}, {"A1", 'D', 8}, {"A5", 'D', 8}}),
         "A1+A1+A1+A1+D6+D6", 1, {2, 2}},
        {"20-i", "A5^4D4", "A1+A1+A5", parts({{"A1+A1", 'D', 4}, {"A5", 'A', 5}}),
         "A1+A1+A5+A5+A5", 0, {6}},
    };

    // the shape basis order must match the part order: A1 parts first
    // (already arranged above to list A1 material before A5)

    auto run = [&](const std::vector<RowSpec>& tab, const std::string& file) {
        std::vector<EmbeddingEntry> out;
        int fail = 0;
        for (const auto& row : tab) {
            NiemeierLattice l = niemeier(row.target);
            auto e = solve_row(l, row);
            if (!e) {
                std::cerr << file << " row " << row.id << ": no embedding reproduces the row\n";
                ++fail;
                continue;
            }
            std::string prov = row.parts.size() == 1 && row.parts[0].shape == row.m
                                   ? "combined embedding into one factor"
                                   : "componentwise standard embeddings";
            e->provenance = prov;
            out.push_back(*e);
            std::cout << file << " row " << row.id << ": ok (" << row.fibers << ")\n";
        }
        std::ofstream f(outdir + "/" + file);
        f << embeddings_to_json_text(out) << "\n";
        return fail;
    };

    int bad = 0;
    bad += run(table_y, "embeddings_y.json");
    bad += run(table_y2, "embeddings_y2.json");
    bad += run(table_s, "embeddings_s.json");
    if (bad) {
        std::cerr << bad << " rows failed\n";
        return 1;
    }
    std::cout << "all rows reproduced\n";
    return 0;
}
