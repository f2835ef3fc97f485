// k3ff: command line front end for the catalog verifier and the analysis
// modules (fibration classification, order-two isogenies, lattices).
//
// Exit codes: 0 success, 1 a verified quantity mismatched, 2 usage or parse
// error.

#include "k3ff/catalog.hpp"
#include "k3ff/embedding.hpp"
#include "k3ff/expr.hpp"
#include "k3ff/height.hpp"
#include "k3ff/kodaira.hpp"
#include "k3ff/niemeier.hpp"
#include "k3ff/roots.hpp"
#include "k3ff/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace k3ff;

namespace {

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

WeierstrassCurve curve_from_list(const std::vector<std::string>& parts, std::int64_t disc) {
    auto p = [&](size_t i) { return parse_expr(parts[i], disc); };
    switch (parts.size()) {
        case 2: return WeierstrassCurve::from_ab(p(0), p(1));
        case 3: return WeierstrassCurve::from_rhs(p(0), p(1), p(2));
        case 5: return WeierstrassCurve::from_a(p(0), p(1), p(2), p(3), p(4));
        default:
            throw parse_error("expected 2 (A,B), 3 (a2,a4,a6) or 5 (a1,...,a6) coefficients, got " +
                              std::to_string(parts.size()));
    }
}

struct AnalyzeInput {
    WeierstrassCurve curve;
    std::vector<CatalogSection> sections;
    std::string label;
};

std::vector<AnalyzeInput> analyze_inputs(const std::string& arg, std::int64_t disc) {
    std::ifstream in(arg);
    if (!in) {
        AnalyzeInput one;
        one.curve = curve_from_list(split_list(arg), disc);
        one.label = "input";
        return {one};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    nlohmann::json j = nlohmann::json::parse(ss.str());
    if (j.is_object()) j = nlohmann::json::array({j});
    std::vector<AnalyzeInput> out;
    for (const auto& row : j) {
        AnalyzeInput one;
        std::vector<std::string> parts;
        for (const auto& a : row.at("a")) parts.push_back(a.get<std::string>());
        one.curve = curve_from_list(parts, disc);
        one.label = row.contains("id") ? row["id"].get<std::string>() : "input";
        if (row.contains("sections"))
            for (const auto& s : row["sections"]) {
                CatalogSection cs;
                cs.x = s.at("x").get<std::string>();
                if (s.contains("y") && !s["y"].is_null()) cs.y = s["y"].get<std::string>();
                if (s.contains("claimed_order")) cs.claimed_order = s["claimed_order"].get<int>();
                one.sections.push_back(std::move(cs));
            }
        out.push_back(std::move(one));
    }
    return out;
}

int run_analyze(const std::string& arg, std::int64_t disc, const std::string& kernel,
                bool isogeny, bool heights, bool minimal) {
    for (const AnalyzeInput& in : analyze_inputs(arg, disc)) {
        const WeierstrassCurve& c = in.curve;
        FibrationReport rep = fiber_configuration(c);
        std::cout << in.label << ":\n";
        std::cout << "  fibers: " << rep.config() << "\n";
        std::cout << "  places: " << rep.config_with_places() << "\n";
        std::cout << "  euler:  " << rep.euler_total << "\n";
        if (minimal) {
            std::cout << "  locally minimal models (place: type, scaling exponent):\n";
            for (const auto& f : rep.fibers)
                std::cout << "    " << f.place.str() << ": " << f.type_str() << ", shift "
                          << f.shift << "\n";
        }
        if (isogeny) {
            WeierstrassCurve sq = c.completed_square();
            KT x0 = kernel.empty() ? KT(0) : parse_expr(kernel, disc);
            if (kernel.empty() && !sq.a6.is_zero()) {
                std::cerr << "  isogeny: (0,0) is not two-torsion on this model; pass "
                             "--kernel <x0>\n";
                return 2;
            }
            KT A, B;
            to_two_torsion_form(sq, x0, &A, &B);
            WeierstrassCurve quot = two_isogeny(A, B);
            std::cout << "  quotient by (" << str(x0) << ", 0):\n";
            std::cout << "    y^2 = x^3 + (" << str(quot.a2) << ")*x^2 + (" << str(quot.a4)
                      << ")*x\n";
            std::cout << "    fibers: " << fiber_configuration(quot).config() << "\n";
        }
        if (heights) {
            if (in.sections.empty()) {
                std::cout << "  heights: no sections catalogued with this input\n";
            }
            std::vector<SectionPoint> free;
            mpz_class tor = 1;
            for (const auto& s : in.sections) {
                SectionPoint p;
                KT x = parse_expr(s.x, disc);
                bool ok = s.y.empty() ? c.section_from_x(x, p)
                                      : c.on_curve(p = SectionPoint(x, parse_expr(s.y, disc)));
                if (!ok) {
                    std::cerr << "  section x = " << s.x << " is not on the curve\n";
                    return 1;
                }
                mpq_class h = section_height(c, p);
                int order = h == 0 ? point_order(c, p, 12) : 0;
                if (order == 0) {
                    std::cout << "  h(x = " << s.x << ") = " << h << "\n";
                    free.push_back(std::move(p));
                } else {
                    std::cout << "  x = " << s.x << ": torsion, order " << order << "\n";
                    tor *= order;
                }
            }
            if (!free.empty()) {
                std::vector<std::vector<mpq_class>> gram(free.size(),
                                                         std::vector<mpq_class>(free.size()));
                for (size_t i = 0; i < free.size(); ++i)
                    for (size_t j = i; j < free.size(); ++j) {
                        gram[i][j] = i == j ? section_height(c, free[i])
                                            : height_pairing(c, free[i], free[j]);
                        gram[j][i] = gram[i][j];
                    }
                std::cout << "  determinant audit (torsion order " << tor
                          << "): " << shioda_tate_audit(rep, gram, tor) << "\n";
            }
        }
    }
    return 0;
}

Lattice lattice_from_arg(const std::string& arg) {
    std::ifstream in(arg);
    if (in) {
        std::ostringstream ss;
        ss << in.rdbuf();
        return lattice_from_json_text(ss.str());
    }
    return m_shape(arg);
}

int run_lattice(const std::string& arg, bool discform, bool roots) {
    Lattice l = lattice_from_arg(arg);
    std::cout << "rank " << l.rank() << ", det " << l.det() << ", "
              << (l.is_even() ? "even" : "odd") << "\n";
    if (discform) {
        DiscForm d = discriminant_form(l);
        std::cout << "discriminant form: " << d.str() << " (group order " << d.group_order()
                  << ")\n";
    }
    if (roots) {
        std::vector<ZVec> rv = enumerate_roots(l);
        AdeSystem sys = ade_classify(l, rv);
        std::cout << rv.size() << " roots, system " << (sys.empty() ? "(none)" : sys.name())
                  << "\n";
    }
    return 0;
}

int run_niemeier(const std::string& name, bool dump) {
    NiemeierLattice l = niemeier(name);
    std::cout << l.name << ": root det " << l.root.det() << ", full det " << l.full.det()
              << ", glue generators " << l.glue_words.size() << "\n";
    if (dump) {
        for (const auto& w : l.glue_words) {
            std::cout << "  [";
            for (size_t i = 0; i < w.size(); ++i) std::cout << (i ? "," : "") << w[i];
            std::cout << "] =";
            for (const auto& q : l.word_vector(w)) std::cout << " " << q;
            std::cout << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Catalog verifier for a pencil of elliptic K3 surfaces"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "replay the catalogued claims");
    int table = 0, jobs = 1;
    std::string surface, id;
    bool as_json = false;
    verify->add_option("--table", table, "restrict to rows of one printed table");
    verify->add_option("--surface", surface, "restrict to one surface tag (Yk, Y2, Sk)");
    verify->add_option("--id", id, "restrict to one catalog row id");
    verify->add_flag("--json", as_json, "machine-readable report");
    verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    auto* analyze = app.add_subcommand("analyze", "classify a Weierstrass model over Q(s)(t)");
    std::string input, kernel;
    std::int64_t disc = 1;
    bool isogeny = false, heights = false, minimal = false;
    analyze->add_option("input", input,
                        "JSON file or comma-separated coefficients a1,a2,a3,a4,a6 "
                        "(or a2,a4,a6, or A,B)")
        ->required();
    analyze->add_flag("--isogeny", isogeny, "quotient by an order-two section");
    analyze->add_flag("--heights", heights, "heights and determinant audit of the sections");
    analyze->add_flag("--minimal-models", minimal, "per-place minimal model data");
    analyze->add_option("--kernel", kernel, "x-coordinate of the order-two kernel (default 0)");
    analyze->add_option("--disc", disc, "D of the coefficient field Q(sqrt(D))");

    auto* lattice = app.add_subcommand("lattice", "inspect a negative definite lattice");
    std::string lat;
    bool discform = false, want_roots = false;
    lattice->add_option("name", lat, "shape name such as A2+D5, or a JSON Gram file")->required();
    lattice->add_flag("--discriminant-form", discform, "finite quadratic form of the dual quotient");
    lattice->add_flag("--roots", want_roots, "enumerate the norm -2 vectors");

    auto* niem = app.add_subcommand("niemeier", "inspect a rank-24 unimodular lattice");
    std::string nname;
    bool dump = false;
    niem->add_option("name", nname, "table key such as E8^3 or A15D9")->required();
    niem->add_flag("--dump", dump, "print the glue generators");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify) {
            VerifyFilter f;
            if (verify->count("--table")) f.table = table;
            if (!surface.empty()) f.surface = surface;
            if (!id.empty()) f.id = id;
            VerifySummary s = verify_all(f, jobs);
            std::cout << (as_json ? summary_to_json(s) : summary_to_text(s));
            return s.exit_code();
        }
        if (*analyze) return run_analyze(input, disc, kernel, isogeny, heights, minimal);
        if (*lattice) return run_lattice(lat, discform, want_roots);
        if (*niem) return run_niemeier(nname, dump);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const catalog_error& e) {
        std::cerr << "catalog error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
