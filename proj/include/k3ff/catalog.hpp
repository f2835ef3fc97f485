#pragma once

// Catalog files: JSON-backed tables of elliptic fibrations, their order-two
// quotients and the order-two isogeny classification of one member surface.
// Loading validates each claimed fiber configuration (well-formed types,
// Euler numbers summing to 24).

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3ff {

class catalog_error : public std::runtime_error {
public:
    explicit catalog_error(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigItem {
    int count = 1;          // geometric multiplicity prefix
    std::string type;       // "I4", "I2*", "III*", ...
    int euler_each = 0;     // Euler number of one fiber of this type
};

struct ParsedConfig {
    std::vector<ConfigItem> items;
    int euler = 0;

    // counts merged, sorted by Euler number descending then type ascending;
    // matches the canonical form produced by the fibration scanner
    std::string canonical() const;
};

// Parse a configuration string like "2I4*+I12+3I1"; throws catalog_error on
// malformed input.
ParsedConfig parse_config(const std::string& text);

struct CatalogSection {
    std::string x;
    std::string y;           // empty: reconstruct from x
    int claimed_order = 0;   // 0 means infinite order
};

struct CurveEntry {
    std::string id, surface, field, claimed_fibers, provenance;
    std::array<std::string, 5> a;  // a1, a2, a3, a4, a6 expressions
    std::vector<CatalogSection> sections;
    int claimed_rank = 0;
    std::vector<int> claimed_torsion;  // invariant factors, empty = trivial
    std::vector<std::string> flags;

    std::int64_t field_disc() const;  // 1 for "Q", D for "Q(sqrt(D))"
};

struct IsogenyEntry {
    std::string id, surface, family, claimed_isogenous_fibers, provenance;
    std::array<std::string, 5> curve_a;  // source fibration model
    std::string kernel_x0;               // x of the order-two kernel section
    std::string claimed_fibers;          // source configuration
    long audit_det = 0;                  // expected Shioda-Tate determinant of the quotient
    long claimed_torsion_order = 1;      // quotient torsion order
    int claimed_rank = 0;                // quotient Mordell-Weil rank
    std::optional<std::array<std::string, 5>> isogenous_a;  // null when unprinted
    std::vector<std::string> generators;                    // x-coordinates on the quotient
    std::vector<std::string> flags;
};

enum class InvolutionClaim { MorrisonNikulin, Self, Exchanges };

struct InvolutionWitness {
    std::string t;               // Moebius image of the base parameter
    std::int64_t field_disc = 1;  // quadratic field of the coordinate change
};

struct InvolutionEntry {
    std::string fibration, surface, kernel_x0, claimed_fibers, provenance;
    InvolutionClaim claimed = InvolutionClaim::MorrisonNikulin;
    std::array<std::string, 5> curve_a;
    std::optional<std::array<std::string, 5>> isogenous_a;
    // base-parameter substitution relating the catalogued quotient model to
    // the computed quotient ("t" when they share the parameter)
    std::string model_map = "t";
    std::optional<std::string> claimed_isogenous_fibers;
    std::optional<InvolutionWitness> witness;
    std::optional<std::string> partner;
    std::vector<std::string> flags;
};

// Directory holding the catalog: $K3FF_CATALOG_DIR when set, else the
// compiled-in default next to the sources.
std::string catalog_dir();

std::vector<CurveEntry> load_curves(const std::string& path);
std::vector<IsogenyEntry> load_isogenies(const std::string& path);
std::vector<InvolutionEntry> load_involutions(const std::string& path);

// Conveniences resolving the named file inside catalog_dir().
std::vector<CurveEntry> load_curves_named(const std::string& filename);
std::vector<IsogenyEntry> load_isogenies_named(const std::string& filename);
std::vector<InvolutionEntry> load_involutions_named(const std::string& filename);

}  // namespace k3ff
