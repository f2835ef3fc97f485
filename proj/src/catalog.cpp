#include "k3ff/catalog.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <regex>

using nlohmann::json;

namespace k3ff {

namespace {

int euler_of_type(const std::string& t) {
    static const std::regex in_re(R"(^I(\d+)(\*?)$)");
    std::smatch m;
    if (std::regex_match(t, m, in_re)) {
        int n = std::stoi(m[1]);
        if (m[2].length()) return n + 6;
        if (n == 0) throw catalog_error("I0 is not a singular fiber type: " + t);
        return n;
    }
    static const std::map<std::string, int> add = {{"II", 2},  {"III", 3},  {"IV", 4},
                                                   {"IV*", 8}, {"III*", 9}, {"II*", 10}};
    auto it = add.find(t);
    if (it == add.end()) throw catalog_error("unknown fiber type: " + t);
    return it->second;
}

}  // namespace

ParsedConfig parse_config(const std::string& text) {
    ParsedConfig out;
    static const std::regex item_re(R"(^(\d*)((?:I\d+\*?)|(?:I[IV]+\*?))$)");
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t plus = text.find('+', pos);
        std::string piece = text.substr(pos, plus == std::string::npos ? plus : plus - pos);
        std::smatch m;
        if (!std::regex_match(piece, m, item_re))
            throw catalog_error("malformed configuration item '" + piece + "' in '" + text + "'");
        ConfigItem it;
        it.count = m[1].length() ? std::stoi(m[1]) : 1;
        if (it.count <= 0) throw catalog_error("zero multiplicity in '" + text + "'");
        it.type = m[2];
        it.euler_each = euler_of_type(it.type);
        out.euler += it.count * it.euler_each;
        out.items.push_back(std::move(it));
        if (plus == std::string::npos) break;
        pos = plus + 1;
    }
    if (out.items.empty()) throw catalog_error("empty fiber configuration");
    return out;
}

std::string ParsedConfig::canonical() const {
    std::map<std::string, std::pair<int, int>> merged;  // type -> (count, euler_each)
    for (const auto& it : items) {
        auto& slot = merged[it.type];
        slot.first += it.count;
        slot.second = it.euler_each;
    }
    std::vector<std::pair<std::string, std::pair<int, int>>> v(merged.begin(), merged.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        if (a.second.second != b.second.second) return a.second.second > b.second.second;
        return a.first < b.first;
    });
    std::string out;
    for (const auto& [type, ce] : v) {
        if (!out.empty()) out += '+';
        if (ce.first > 1) out += std::to_string(ce.first);
        out += type;
    }
    return out;
}

std::int64_t CurveEntry::field_disc() const {
    if (field == "Q") return 1;
    static const std::regex fre(R"(^Q\(sqrt\((-?\d+)\)\)$)");
    std::smatch m;
    if (std::regex_match(field, m, fre)) return std::stoll(m[1]);
    throw catalog_error("unrecognized field tag: " + field);
}

std::string catalog_dir() {
    if (const char* env = std::getenv("K3FF_CATALOG_DIR")) return env;
#ifdef K3FF_DEFAULT_CATALOG_DIR
    return K3FF_DEFAULT_CATALOG_DIR;
#else
    return "data";
#endif
}

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw catalog_error("cannot open catalog file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw catalog_error("bad JSON in " + path + ": " + e.what());
    }
    if (!j.is_array()) throw catalog_error("catalog file must hold an array: " + path);
    return j;
}

std::array<std::string, 5> read_a5(const json& j, const std::string& ctx) {
    if (!j.is_array() || j.size() != 5)
        throw catalog_error(ctx + ": coefficient list must have 5 entries");
    std::array<std::string, 5> out;
    for (int i = 0; i < 5; ++i) out[i] = j[i].get<std::string>();
    return out;
}

void check_config(const std::string& cfg, const std::string& ctx) {
    ParsedConfig pc = parse_config(cfg);
    if (pc.euler != 24)
        throw catalog_error(ctx + ": configuration '" + cfg + "' has Euler number " +
                            std::to_string(pc.euler) + ", expected 24");
}

std::vector<std::string> read_flags(const json& row) {
    std::vector<std::string> out;
    if (row.contains("flags"))
        for (const auto& f : row["flags"]) out.push_back(f.get<std::string>());
    return out;
}

}  // namespace

std::vector<CurveEntry> load_curves(const std::string& path) {
    json j = load_json(path);
    std::vector<CurveEntry> out;
    for (const auto& row : j) {
        CurveEntry e;
        e.id = row.at("id").get<std::string>();
        std::string ctx = path + " id " + e.id;
        e.surface = row.at("surface").get<std::string>();
        e.field = row.at("field").get<std::string>();
        e.field_disc();  // validate early
        e.a = read_a5(row.at("a"), ctx);
        e.claimed_fibers = row.at("claimed_fibers").get<std::string>();
        check_config(e.claimed_fibers, ctx);
        for (const auto& s : row.at("sections")) {
            CatalogSection cs;
            cs.x = s.at("x").get<std::string>();
            if (s.contains("y") && !s["y"].is_null()) cs.y = s["y"].get<std::string>();
            cs.claimed_order = s.at("claimed_order").get<int>();
            e.sections.push_back(std::move(cs));
        }
        e.claimed_rank = row.at("claimed_rank").get<int>();
        for (const auto& n : row.at("claimed_torsion")) e.claimed_torsion.push_back(n.get<int>());
        e.flags = read_flags(row);
        e.provenance = row.at("provenance").get<std::string>();
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<IsogenyEntry> load_isogenies(const std::string& path) {
    json j = load_json(path);
    std::vector<IsogenyEntry> out;
    for (const auto& row : j) {
        IsogenyEntry e;
        e.id = row.at("id").get<std::string>();
        std::string ctx = path + " id " + e.id;
        e.surface = row.at("surface").get<std::string>();
        e.family = row.at("family").get<std::string>();
        e.audit_det = row.at("audit_det").get<long>();
        e.curve_a = read_a5(row.at("curve_a"), ctx);
        e.kernel_x0 = row.at("kernel_x0").get<std::string>();
        e.claimed_fibers = row.at("claimed_fibers").get<std::string>();
        check_config(e.claimed_fibers, ctx);
        e.claimed_torsion_order = row.at("claimed_torsion_order").get<long>();
        e.claimed_rank = row.at("claimed_rank").get<int>();
        if (!row.at("isogenous_a").is_null()) e.isogenous_a = read_a5(row["isogenous_a"], ctx);
        e.claimed_isogenous_fibers = row.at("claimed_isogenous_fibers").get<std::string>();
        check_config(e.claimed_isogenous_fibers, ctx);
        for (const auto& g : row.at("generators")) e.generators.push_back(g.get<std::string>());
        e.flags = read_flags(row);
        e.provenance = row.at("provenance").get<std::string>();
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<InvolutionEntry> load_involutions(const std::string& path) {
    json j = load_json(path);
    std::vector<InvolutionEntry> out;
    for (const auto& row : j) {
        InvolutionEntry e;
        e.fibration = row.at("fibration").get<std::string>();
        std::string ctx = path + " fibration " + e.fibration;
        e.surface = row.at("surface").get<std::string>();
        std::string cl = row.at("claimed").get<std::string>();
        if (cl == "MorrisonNikulin")
            e.claimed = InvolutionClaim::MorrisonNikulin;
        else if (cl == "Self")
            e.claimed = InvolutionClaim::Self;
        else if (cl == "Exchanges")
            e.claimed = InvolutionClaim::Exchanges;
        else
            throw catalog_error(ctx + ": unknown claim '" + cl + "'");
        e.kernel_x0 = row.at("kernel_x0").get<std::string>();
        e.curve_a = read_a5(row.at("curve_a"), ctx);
        e.claimed_fibers = row.at("claimed_fibers").get<std::string>();
        check_config(e.claimed_fibers, ctx);
        if (!row.at("isogenous_a").is_null()) e.isogenous_a = read_a5(row["isogenous_a"], ctx);
        if (row.contains("model_map") && !row["model_map"].is_null())
            e.model_map = row["model_map"].get<std::string>();
        if (row.contains("claimed_isogenous_fibers") && !row["claimed_isogenous_fibers"].is_null()) {
            e.claimed_isogenous_fibers = row["claimed_isogenous_fibers"].get<std::string>();
            check_config(*e.claimed_isogenous_fibers, ctx);
        }
        if (!row.at("witness").is_null()) {
            InvolutionWitness w;
            w.t = row["witness"].at("t").get<std::string>();
            w.field_disc = row["witness"].at("field_disc").get<std::int64_t>();
            e.witness = std::move(w);
        }
        if (row.contains("partner") && !row["partner"].is_null())
            e.partner = row["partner"].get<std::string>();
        e.flags = read_flags(row);
        e.provenance = row.at("provenance").get<std::string>();
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<CurveEntry> load_curves_named(const std::string& filename) {
    return load_curves(catalog_dir() + "/" + filename);
}
std::vector<IsogenyEntry> load_isogenies_named(const std::string& filename) {
    return load_isogenies(catalog_dir() + "/" + filename);
}
std::vector<InvolutionEntry> load_involutions_named(const std::string& filename) {
    return load_involutions(catalog_dir() + "/" + filename);
}

}  // namespace k3ff
