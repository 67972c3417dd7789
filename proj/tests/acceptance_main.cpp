// Acceptance suite: every release gate in one binary. Each criterion prints
// one PASS/FAIL line; the process exits nonzero if any criterion fails.
// Usage: acceptance <path-to-cli-binary>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "permtab/bijections.hpp"
#include "permtab/counting.hpp"
#include "permtab/permutation.hpp"
#include "permtab/render.hpp"
#include "permtab/tableau.hpp"
#include "permtab/verify.hpp"

namespace {

using namespace permtab;

std::string g_cli;

struct RunResult {
    int status = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string command = "'" + g_cli + "' " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    RunResult result;
    if (!pipe) return result;
    char buffer[4096];
    while (fgets(buffer, sizeof buffer, pipe)) result.output += buffer;
    const int rc = pclose(pipe);
    result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return result;
}

struct Checker {
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    template <typename T, typename U>
    void expect_eq(const T& got, const U& want, const std::string& what) {
        if (!(got == static_cast<T>(want)))
            failures.push_back(what + " (got " + std::to_string(got) + ", want " +
                               std::to_string(want) + ")");
    }
};

const char* const kFigureText =
    "shape: 4,4,4,3\n"
    "**..\n"
    "..*.\n"
    "****\n"
    "..*\n";

std::filesystem::path scratch_dir() {
    static const std::filesystem::path dir = [] {
        auto path = std::filesystem::temp_directory_path() /
                    ("permtab_acceptance_" + std::to_string(getpid()));
        std::filesystem::create_directories(path);
        return path;
    }();
    return dir;
}

std::string write_fixture(const std::string& name, const std::string& content) {
    const auto path = scratch_dir() / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path.string();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Shared verification reports, computed once at the documented scales.
const VerificationReport& counts_report() {
    static const VerificationReport report = verify_counts(12);
    return report;
}
const VerificationReport& bijections_report() {
    static const VerificationReport report = verify_bijections(6);
    return report;
}
const VerificationReport& tableaux_report() {
    static const VerificationReport report = verify_tableaux(7);
    return report;
}

void expect_check(Checker& c, const VerificationReport& report, const std::string& name) {
    for (const CheckResult& check : report.checks) {
        if (check.name != name) continue;
        c.expect(check.passed, "check " + name + " failed: " + check.witness);
        return;
    }
    c.expect(false, "check " + name + " missing from report");
}

void criterion_worked_examples(Checker& c) {
    const RunResult psi = run_cli("psi 52318674");
    c.expect(psi.status == 0 && psi.output == "3142\n",
             "cli psi 52318674 should print 3142, got '" + psi.output + "'");
    const std::string fig = write_fixture("figure.tab", kFigureText);
    const RunResult phi_run = run_cli("phi '" + fig + "'");
    c.expect(phi_run.status == 0 && phi_run.output == "74836215\n",
             "cli phi of the figure tableau should print 74836215, got '" + phi_run.output + "'");
    const PermutationTableau t = parse_tableau(kFigureText);
    c.expect(render_ascii(t, 1).find("pi(1) = 7") != std::string::npos,
             "traced path of label 1 should report pi(1) = 7");
    c.expect(render_ascii(t, 6).find("pi(6) = 2") != std::string::npos,
             "traced path of label 6 should report pi(6) = 2");
}

void criterion_max_fixed_identities(Checker& c) {
    expect_check(c, counts_report(), "alt-max-fixed-equals-derangements");
    expect_check(c, counts_report(), "rev-max-fixed-equals-derangements");
    expect_check(c, counts_report(), "max-fixed-formula-alt");
    expect_check(c, counts_report(), "max-fixed-formula-rev");
    const std::map<int, std::uint64_t> expected = {{4, 1}, {6, 2}, {8, 9}, {10, 44}, {12, 265}};
    for (const auto& [n, want] : expected) {
        const CountsTable table = counts_table(n);
        c.expect_eq(table.d[static_cast<size_t>((n + 1) / 2)], want,
                    "d_{ceil(n/2)}(" + std::to_string(n) + ")");
    }
}

void criterion_psi_bijectivity(Checker& c) {
    expect_check(c, bijections_report(), "psi-formulations-agree");
    expect_check(c, bijections_report(), "psi-roundtrips");
    expect_check(c, bijections_report(), "psi-image-is-derangement-set");
    // |A_6| = D_6 = 265, counted directly from the stream.
    std::uint64_t members = 0;
    scan_alternating(12, false, [&members](std::span<const int> word) {
        int fixed = 0;
        for (size_t i = 0; i < word.size(); ++i)
            if (word[i] == static_cast<int>(i) + 1) ++fixed;
        if (fixed == 6) ++members;
        return true;
    });
    c.expect_eq(members, std::uint64_t{265}, "|A_6|");
}

void criterion_phi_bijectivity(Checker& c) {
    expect_check(c, tableaux_report(), "tableau-count-is-factorial");
    expect_check(c, tableaux_report(), "phi-images-distinct");
    expect_check(c, tableaux_report(), "phi-weak-excedances-are-vertical-labels");
    expect_check(c, tableaux_report(), "phi-fixed-points-are-empty-rows");
}

void criterion_theta(Checker& c) {
    expect_check(c, tableaux_report(), "theta-doubles-semiperimeter");
    expect_check(c, tableaux_report(), "psi-tab-inverts-theta");
    expect_check(c, tableaux_report(), "theta-inverts-psi-tab");
}

void criterion_commuting_square(Checker& c) {
    expect_check(c, tableaux_report(), "tableau-square-commutes");
}

void criterion_structural_facts(Checker& c) {
    expect_check(c, counts_report(), "alternating-consecutive-fixed-points");
    expect_check(c, tableaux_report(), "max-fixed-tableaux-first-row-nonempty");
    expect_check(c, tableaux_report(), "max-fixed-tableaux-no-triple-empty-run");
    expect_check(c, tableaux_report(), "max-fixed-tableaux-empty-runs-strict-after-pair");
}

void criterion_cross_counting(Checker& c) {
    expect_check(c, counts_report(), "derangement-recurrence-vs-brute-force");
    expect_check(c, counts_report(), "row-sums-equal-zigzag-count");
    c.expect_eq(derangement_count(8), std::uint64_t{14833}, "D_8");
    c.expect_eq(alternating_count(10), std::uint64_t{50521}, "E_10");
    std::uint64_t stream_count = 0;
    scan_alternating(10, false, [&stream_count](std::span<const int>) {
        ++stream_count;
        return true;
    });
    c.expect_eq(stream_count, std::uint64_t{50521}, "alternating stream count at n=10");
}

void criterion_determinism(Checker& c) {
    const RunResult verify_a = run_cli("verify --max-n 10");
    const RunResult verify_b = run_cli("verify --max-n 10");
    c.expect(verify_a.status == 0, "verify --max-n 10 should exit 0");
    c.expect(verify_a.output == verify_b.output,
             "two runs of verify --max-n 10 should be byte-identical");
    const std::string fig = write_fixture("figure_det.tab", kFigureText);
    const std::string svg1 = (scratch_dir() / "det1.svg").string();
    const std::string svg2 = (scratch_dir() / "det2.svg").string();
    const RunResult r1 = run_cli("render '" + fig + "' --svg '" + svg1 + "' --trace 1 --trace 6");
    const RunResult r2 = run_cli("render '" + fig + "' --svg '" + svg2 + "' --trace 1 --trace 6");
    c.expect(r1.status == 0 && r2.status == 0, "render --svg should exit 0");
    const std::string bytes1 = read_file(svg1);
    c.expect(!bytes1.empty() && bytes1 == read_file(svg2),
             "two runs of render --svg should be byte-identical");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli-binary>\n";
        return 2;
    }
    g_cli = argv[1];

    struct Criterion {
        int id;
        const char* title;
        std::function<void(Checker&)> body;
    };
    const std::vector<Criterion> criteria = {
        {1, "worked-example goldens", criterion_worked_examples},
        {2, "max-fixed-point counts equal derangement numbers (n <= 12)",
         criterion_max_fixed_identities},
        {3, "psi is a bijection on A_m (m <= 6)", criterion_psi_bijectivity},
        {4, "phi is a bijection and border labels classify excedances (semiperimeter <= 7)",
         criterion_phi_bijectivity},
        {5, "theta inverts psi_tab on both sides (n <= 6 / n <= 5)", criterion_theta},
        {6, "tableau square commutes (n <= 5)", criterion_commuting_square},
        {7, "structural facts on fixed-point runs and empty rows", criterion_structural_facts},
        {8, "cross-method counting agreement (D_8, E_10)", criterion_cross_counting},
        {9, "byte-identical verify and svg outputs", criterion_determinism},
    };

    int failed = 0;
    for (const Criterion& criterion : criteria) {
        Checker checker;
        const auto start = std::chrono::steady_clock::now();
        criterion.body(checker);
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = checker.failures.empty();
        if (!ok) ++failed;
        std::printf("CRITERION %d %s %s (%.1fs)\n", criterion.id, ok ? "PASS" : "FAIL",
                    criterion.title, elapsed);
        for (const std::string& failure : checker.failures)
            std::printf("  detail: %s\n", failure.c_str());
    }
    std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failed,
                criteria.size());
    return failed == 0 ? 0 : 1;
}
