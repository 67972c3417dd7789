#pragma once

#include <string>
#include <vector>

#include "permtab/caps.hpp"

namespace permtab {

struct CheckResult {
    std::string name;      // kebab-case, no spaces
    std::string range;     // e.g. "n=4..12", no spaces
    bool passed = false;
    std::string witness;   // first counterexample in enumeration order; empty when passed
    double elapsed_seconds = 0.0;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

// Counting identities: the maximal-fixed-point counts equal derangement
// numbers, the max-fixed-point formulas, row sums against the zigzag
// numbers, the odd-length alternating/reverse symmetry, recurrence vs brute
// force, enumerator-vs-filter agreement, and the consecutive-fixed-point
// facts for alternating permutations. n_max bounds the permutation length;
// individual checks clamp to their own exhaustive ranges.
VerificationReport verify_counts(int n_max);

// The permutation-level bijection suite over A_m for m <= m_max: the two
// formulations agree, both roundtrips are identities, the image is exactly
// the derangement set, the block-structure facts hold, and to_derangement is
// injective onto the target derangement set for all four classes.
VerificationReport verify_bijections(int m_max);

// The tableau suite: tableau counts are factorials with pairwise distinct
// phi-images (semiperimeter <= min(n_max, 7)), border labels classify
// excedances and empty rows give fixed points, the theta/psi_tab roundtrips
// (derangement side n <= min(n_max, 6), alternating side n <= min(n_max, 5)),
// the commuting square, and the structural facts about empty-row runs.
VerificationReport verify_tableaux(int n_max);

// All three suites in fixed registry order. n_max plays the role of the
// permutation length bound everywhere: bijections run to m <= min(n_max/2, 6)
// and tableaux to min(n_max, 7).
VerificationReport verify_all(int n_max = 12);

// Human-readable lines; omits timings unless with_timings (timings are not
// byte-stable across runs).
std::string to_text(const VerificationReport& report, bool with_timings = false);
// One line per check: "CHECK <name> <range> <PASS|FAIL> [witness]".
std::string to_machine(const VerificationReport& report);

}  // namespace permtab
