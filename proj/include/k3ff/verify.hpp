#pragma once

// Catalog verification engine: replays every checkable claim of the shipped
// catalog files (fibration frames, Weierstrass models, order-two quotients
// and the involution classification) and reports a per-claim status.
//
// Status semantics:
//   verified             computed value equals the catalogued claim
//   mismatch             disagreement on an unflagged entry (fails the run)
//   flagged-discrepancy  disagreement on an entry whose catalog row carries a
//                        discrepancy flag; listed but does not fail the run
//   skipped              claim not checkable from the catalogued data
//
// verify_all exits 0 iff no claim is a mismatch.

#include <optional>
#include <string>
#include <vector>

namespace k3ff {

enum class ClaimStatus { Verified, Mismatch, Flagged, Skipped };

std::string claim_status_str(ClaimStatus s);

struct ClaimResult {
    std::string claim;     // short name of the checked quantity
    ClaimStatus status = ClaimStatus::Skipped;
    std::string expected;  // catalogued value (mismatch/verified)
    std::string computed;  // recomputed value (mismatch/verified)
    std::string reason;    // free text for flagged/skipped
};

struct VerificationReport {
    std::string id;       // catalog row key
    std::string dataset;  // catalog file stem, e.g. "curves_y"
    std::string surface;
    std::vector<int> tables;  // printed-table tags this row belongs to
    std::vector<ClaimResult> claims;
    double seconds = 0.0;

    bool has_mismatch() const;
    bool all_verified() const;
};

struct VerifyFilter {
    std::optional<int> table;
    std::optional<std::string> surface;
    std::optional<std::string> id;
};

struct VerifySummary {
    std::vector<VerificationReport> reports;
    int verified = 0, mismatched = 0, flagged = 0, skipped = 0;

    int exit_code() const { return mismatched ? 1 : 0; }
};

// Run every claim of every catalogued row passing the filter; jobs > 1
// distributes rows over worker threads, output order stays deterministic.
VerifySummary verify_all(const VerifyFilter& filter = {}, int jobs = 1);

std::string summary_to_text(const VerifySummary& s);
std::string summary_to_json(const VerifySummary& s);

}  // namespace k3ff
