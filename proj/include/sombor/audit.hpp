#pragma once

#include "sombor/families.hpp"
#include "sombor/forms.hpp"
#include "sombor/theorems.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sombor {

enum class Verdict { match, mismatch, region_mismatch, not_applicable };

const char* verdict_name(Verdict v); // "match", "mismatch", "region-mismatch", "not-applicable"

struct NumericSample {
    long long p = 0, q = 0;
    double lhs = 0.0; // independently derived value
    double rhs = 0.0; // stated/claimed value
    double abs_diff = 0.0;
};

// One audited claim. symbolic_difference, where present, is always oriented
// derived minus stated; a match therefore carries the zero form.
struct Finding {
    std::string check_id;
    std::string family;
    Verdict verdict = Verdict::match;
    std::optional<PiecewiseForm> symbolic_difference;
    std::vector<NumericSample> numeric_samples;
    std::string note;
};

struct AuditSummary {
    int match = 0, mismatch = 0, region_mismatch = 0, not_applicable = 0;
    int total() const { return match + mismatch + region_mismatch + not_applicable; }
};

struct AuditReport {
    std::vector<Finding> findings; // sorted by (check_id, family)
    AuditSummary summary;
    std::string tool_version;
    std::string timestamp;
};

struct AuditOptions {
    // 1 = the serial reference loop; 0 = one task per hardware thread; N > 1 =
    // that many workers. All choices produce byte-identical reports.
    int workers = 1;
    std::string timestamp = "unspecified";
};

// Individual checks. Checks that compare against a family resolve it through
// the registry, so file-loaded replacements are what gets audited.
Finding check_edge_total(const FamilySpec& fam);
Finding check_theorem(const TheoremClaim& claim, const FamilyRegistry& reg);
Finding check_thm17_row(const Thm17Entry& entry, const FamilyRegistry& reg);
Finding check_inequalities(const FamilySpec& fam);
Finding check_negative_counts(const FamilySpec& fam);
Finding check_closed_form(const ClosedFormClaim18& claim, const FamilyRegistry& reg);

// Everything at once: per family edge totals, negative-count scans and index
// inequalities; the sixteen closed-form claims; the average-index table; the
// four classical-index forms. Findings are index-assembled and then sorted, so
// worker count never changes the output.
AuditReport run_full_audit(const FamilyRegistry& reg, const AuditOptions& opts = {});

std::string render_json(const AuditReport& report);
std::string render_markdown(const AuditReport& report);
std::string render_csv(const AuditReport& report);

} // namespace sombor
