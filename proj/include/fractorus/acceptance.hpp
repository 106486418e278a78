// fractorus — built-in verification suite ("selftest").
//
// Each criterion is an end-to-end check of one pillar of the library:
// cross-route agreement, dual kernel series, closed-form kernel and constant
// identities, limiting behaviour, kernel bounds, extension traces, seminorm
// families, and (last) a mutation check that deliberately perturbs the
// library's special constants and verifies that the suite notices — guarding
// the suite itself against vacuous comparisons.
//
// Criteria are deterministic and independent; run_all executes them in id
// order and reports one [PASS]/[FAIL] line per criterion.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fractorus::acceptance {

struct CriterionResult {
    std::string id;
    bool passed = false;
    double elapsed_s = 0.0;
    std::string detail;  // worst-case numbers vs. their bounds
};

// Ids in execution order.
std::vector<std::string> criterion_ids();

// Run one criterion by exact id (InputError on unknown id).
CriterionResult run_criterion(const std::string& id);

// Run every criterion whose id contains `filter` (all when empty).  When
// `live` is non-null a [PASS]/[FAIL] line is streamed per criterion as it
// finishes.
std::vector<CriterionResult> run_all(const std::string& filter = "",
                                     std::ostream* live = nullptr);

bool all_passed(const std::vector<CriterionResult>& results);

// Formatted line: "[PASS] <id>: <detail> (<elapsed> s)".
std::string format_line(const CriterionResult& r);

// Stream the full suite (with a trailing summary line); returns the number
// of failed criteria.
int run_and_report(std::ostream& os, const std::string& filter = "");

} // namespace fractorus::acceptance
