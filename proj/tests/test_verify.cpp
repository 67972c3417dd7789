#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "permtab/verify.hpp"

using namespace permtab;

TEST_CASE("all suites pass on small ranges") {
    const VerificationReport report = verify_all(4);
    CHECK(report.all_passed());
    for (const CheckResult& check : report.checks) {
        CHECK(check.witness.empty());
        CHECK(check.name.find(' ') == std::string::npos);
        CHECK(check.range.find(' ') == std::string::npos);
    }
    std::set<std::string> names;
    for (const CheckResult& check : report.checks) names.insert(check.name);
    CHECK(names.size() == report.checks.size());
}

TEST_CASE("empty ranges pass vacuously") {
    CHECK(verify_counts(3).all_passed());
    CHECK(verify_bijections(0).all_passed());
    CHECK(verify_tableaux(1).all_passed());
}

TEST_CASE("bijection suite at the documented scale") {
    const VerificationReport report = verify_bijections(4);
    CHECK(report.all_passed());
    bool found = false;
    for (const CheckResult& check : report.checks)
        if (check.name == "psi-image-is-derangement-set") found = true;
    CHECK(found);
}

TEST_CASE("registry order and ranges are stable") {
    CHECK(to_machine(verify_all(4)) ==
          "CHECK alt-max-fixed-equals-derangements n=4..4 PASS\n"
          "CHECK rev-max-fixed-equals-derangements n=5..4 PASS\n"
          "CHECK max-fixed-formula-alt n=4..4 PASS\n"
          "CHECK max-fixed-formula-rev n=5..4 PASS\n"
          "CHECK row-sums-equal-zigzag-count n=0..4 PASS\n"
          "CHECK odd-length-alt-rev-symmetry n=1..4 PASS\n"
          "CHECK derangement-recurrence-vs-brute-force n=0..4 PASS\n"
          "CHECK derangement-stream-matches-filter n=0..4 PASS\n"
          "CHECK alternating-stream-matches-filter n=0..4 PASS\n"
          "CHECK weak-excedances-partition-positions n=0..4 PASS\n"
          "CHECK complement-swaps-alternation n=0..4 PASS\n"
          "CHECK reversal-conjugation-odd-lengths n=1..4 PASS\n"
          "CHECK alternating-consecutive-fixed-points n=0..4 PASS\n"
          "CHECK psi-formulations-agree m=0..2 PASS\n"
          "CHECK psi-roundtrips m=0..2 PASS\n"
          "CHECK psi-image-is-derangement-set m=0..2 PASS\n"
          "CHECK psi-block-structure m=0..2 PASS\n"
          "CHECK to-derangement-injective-per-class n=4..4 PASS\n"
          "CHECK tableau-count-is-factorial s=0..4 PASS\n"
          "CHECK phi-images-distinct s=0..4 PASS\n"
          "CHECK phi-weak-excedances-are-vertical-labels s=0..4 PASS\n"
          "CHECK phi-fixed-points-are-empty-rows s=0..4 PASS\n"
          "CHECK phi-alternating-images-consecutive-fixed s=0..4 PASS\n"
          "CHECK derangement-tableaux-have-no-empty-rows n=0..4 PASS\n"
          "CHECK theta-doubles-semiperimeter n=0..4 PASS\n"
          "CHECK psi-tab-inverts-theta n=0..4 PASS\n"
          "CHECK theta-inverts-psi-tab n=0..4 PASS\n"
          "CHECK tableau-square-commutes n=0..4 PASS\n"
          "CHECK max-fixed-tableaux-first-row-nonempty n=1..4 PASS\n"
          "CHECK max-fixed-tableaux-no-triple-empty-run n=0..4 PASS\n"
          "CHECK max-fixed-tableaux-empty-runs-strict-after-pair n=0..4 PASS\n");
}

TEST_CASE("reports are deterministic") {
    const VerificationReport a = verify_counts(6);
    const VerificationReport b = verify_counts(6);
    CHECK(to_machine(a) == to_machine(b));
    CHECK(to_text(a) == to_text(b));
}

TEST_CASE("report formats") {
    VerificationReport report;
    report.checks.push_back({"sample-pass", "n=1..4", true, "", 0.01});
    report.checks.push_back({"sample-fail", "n=1..4", false, "perm=21", 0.01});
    CHECK_FALSE(report.all_passed());
    CHECK(to_machine(report) ==
          "CHECK sample-pass n=1..4 PASS\n"
          "CHECK sample-fail n=1..4 FAIL perm=21\n");
    const std::string text = to_text(report);
    CHECK(text.find("PASS sample-pass") != std::string::npos);
    CHECK(text.find("witness: perm=21") != std::string::npos);
    CHECK(text.find("1/2 checks passed") != std::string::npos);
    CHECK(text.find("ms") == std::string::npos);
    const std::string timed = to_text(report, true);
    CHECK(timed.find("ms") != std::string::npos);
}
