#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "permtab/bijections.hpp"
#include "permtab/counting.hpp"
#include "permtab/errors.hpp"
#include "permtab/permutation.hpp"
#include "permtab/render.hpp"
#include "permtab/tableau.hpp"
#include "permtab/verify.hpp"

namespace {

permtab::PermutationTableau read_tableau_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw permtab::ParseError("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return permtab::parse_tableau(buffer.str());
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw permtab::ParseError("cannot open file '" + path + "' for writing");
    out << content;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "permtab: permutation tableaux, alternating permutations and derangement bijections"};
    app.require_subcommand(1);

    std::string perm_text;
    auto* psi_cmd = app.add_subcommand(
        "psi", "map a maximal-fixed-point (reverse-)alternating permutation to a derangement");
    psi_cmd->add_option("permutation", perm_text, "one-line permutation text")->required();

    std::string derangement_text;
    auto* psi_inv_cmd =
        app.add_subcommand("psi-inv", "map a derangement of [m] to the alternating "
                                      "permutation of [2m] with m fixed points it comes from");
    psi_inv_cmd->add_option("derangement", derangement_text, "one-line permutation text")
        ->required();

    std::string phi_file;
    auto* phi_cmd = app.add_subcommand("phi", "decode a permutation tableau file into a permutation");
    phi_cmd->add_option("tableau-file", phi_file, "tableau text file")->required();

    std::string theta_file;
    auto* theta_cmd =
        app.add_subcommand("theta", "insert the empty-row staircase into a tableau with no empty rows");
    theta_cmd->add_option("tableau-file", theta_file, "tableau text file")->required();

    std::string psi_tab_file;
    auto* psi_tab_cmd = app.add_subcommand("psi-tab", "delete all empty rows of a tableau");
    psi_tab_cmd->add_option("tableau-file", psi_tab_file, "tableau text file")->required();

    int counts_n = 0;
    bool counts_machine = false;
    auto* counts_cmd =
        app.add_subcommand("counts", "fixed-point distribution of the alternating permutations of [n]");
    counts_cmd->add_option("--n", counts_n, "permutation length")->required();
    counts_cmd->add_flag("--machine", counts_machine, "one line per k: 'n k d d_star'");

    int verify_max_n = 12;
    bool verify_machine = false;
    bool verify_timings = false;
    auto* verify_cmd = app.add_subcommand("verify", "run the exhaustive identity checks");
    verify_cmd->add_option("--max-n", verify_max_n, "largest permutation length (default 12)");
    verify_cmd->add_flag("--machine", verify_machine, "one 'CHECK ...' line per check");
    verify_cmd->add_flag("--timings", verify_timings,
                         "include per-check elapsed time (not byte-stable)");

    std::string render_file;
    std::string svg_path;
    std::vector<int> traces;
    auto* render_cmd = app.add_subcommand("render", "draw a tableau as text or SVG");
    render_cmd->add_option("tableau-file", render_file, "tableau text file")->required();
    render_cmd->add_option("--svg", svg_path, "write an SVG document to this path");
    render_cmd->add_option("--trace", traces, "overlay the zig-zag path of this border label");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (psi_cmd->parsed()) {
            const permtab::Permutation p = permtab::parse_permutation(perm_text);
            // Infer the variant; a permutation that is neither gets the
            // alternating-side diagnostic.
            const permtab::AlternationKind kind =
                permtab::is_reverse_alternating(p) && !permtab::is_alternating(p)
                    ? permtab::AlternationKind::reverse_alternating
                    : permtab::AlternationKind::alternating;
            std::cout << permtab::to_text(permtab::to_derangement(p, kind)) << "\n";
        } else if (psi_inv_cmd->parsed()) {
            const permtab::Permutation s = permtab::parse_permutation(derangement_text);
            std::cout << permtab::to_text(permtab::psi_inverse(s)) << "\n";
        } else if (phi_cmd->parsed()) {
            std::cout << permtab::to_text(permtab::phi(read_tableau_file(phi_file))) << "\n";
        } else if (theta_cmd->parsed()) {
            std::cout << permtab::to_text(permtab::theta(read_tableau_file(theta_file)));
        } else if (psi_tab_cmd->parsed()) {
            std::cout << permtab::to_text(permtab::psi_tab(read_tableau_file(psi_tab_file)));
        } else if (counts_cmd->parsed()) {
            const permtab::CountsTable table = permtab::counts_table(counts_n);
            std::cout << (counts_machine ? permtab::to_machine(table) : permtab::to_text(table));
        } else if (verify_cmd->parsed()) {
            const permtab::VerificationReport report = permtab::verify_all(verify_max_n);
            std::cout << (verify_machine ? permtab::to_machine(report)
                                         : permtab::to_text(report, verify_timings));
            return report.all_passed() ? 0 : 1;
        } else if (render_cmd->parsed()) {
            const permtab::PermutationTableau t = read_tableau_file(render_file);
            if (!svg_path.empty()) {
                write_file(svg_path, permtab::render_svg(t, traces));
            } else {
                if (traces.size() > 1) {
                    std::cerr << "render: at most one --trace is supported without --svg\n";
                    return 2;
                }
                std::optional<int> trace;
                if (!traces.empty()) trace = traces.front();
                std::cout << permtab::render_ascii(t, trace);
            }
        }
    } catch (const permtab::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const permtab::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const permtab::CapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
