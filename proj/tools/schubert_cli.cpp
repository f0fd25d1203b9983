// Command-line front end: Rothe-diagram statistics, Schubert polynomials by
// either route, reduced pipe-dream listings, simple-ladder paths, ladder
// graphs, and the exhaustive verification sweeps.  Output is deterministic:
// identical invocations produce byte-identical bytes.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "schubert/schubert.hpp"

namespace {

using nlohmann::json;
using namespace schubert;

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string cell_str(Cell c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

std::string move_str(const LadderMove& mv) {
    return "(" + std::to_string(mv.anchor_row) + "," + std::to_string(mv.anchor_col) +
           ",m=" + std::to_string(mv.rungs) + ")";
}

int run_info(const Permutation& w, const std::string& format) {
    const CellSet diagram = rothe_diagram(w);
    const std::vector<PatternTriple> patterns = pattern_occurrences_132(w);
    const int n = w.size();
    std::vector<std::vector<int>> rank_table(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            rank_table[static_cast<std::size_t>(i) - 1].push_back(rank(w, i, j));
    if (format == "json") {
        json patterns_json = json::array();
        for (const PatternTriple& t : patterns) patterns_json.push_back({t.i, t.j, t.k});
        print_json({{"word", w.word()},
                    {"n", n},
                    {"length", length(w)},
                    {"code", m_vector(w)},
                    {"eta", eta(w)},
                    {"rothe_diagram", to_json(diagram)},
                    {"rank_table", rank_table},
                    {"patterns_132", patterns_json}});
        return 0;
    }
    std::cout << "permutation: " << w.str() << "\n";
    std::cout << "n: " << n << "\n";
    std::cout << "length: " << length(w) << "\n";
    std::cout << "code:";
    for (int m : m_vector(w)) std::cout << ' ' << m;
    std::cout << "\n";
    std::cout << "rothe diagram (" << diagram.size() << " cells):";
    for (Cell c : diagram) std::cout << ' ' << cell_str(c);
    std::cout << "\n";
    for (int i = 1; i <= n; ++i) {
        std::cout << "  ";
        for (int j = 1; j <= n; ++j) std::cout << (diagram.contains({i, j}) ? '#' : '.');
        std::cout << "\n";
    }
    std::cout << "rank table:\n";
    for (const auto& row : rank_table) {
        std::cout << "  ";
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j > 0) std::cout << ' ';
            std::cout << row[j];
        }
        std::cout << "\n";
    }
    std::cout << "eta: " << eta(w) << "\n";
    std::cout << "132 patterns (" << patterns.size() << "):";
    for (const PatternTriple& t : patterns)
        std::cout << " (" << t.i << "," << t.j << "," << t.k << ")";
    std::cout << "\n";
    return 0;
}

int run_schubert(const Permutation& w, const std::string& method, const std::string& format) {
    if (method == "both") {
        const Polynomial from_dreams = schubert_from_pipedreams(w);
        const Polynomial from_divdiff = schubert_divdiff(w);
        const bool equal = from_dreams == from_divdiff;
        if (format == "json") {
            print_json({{"word", w.word()},
                        {"method", "both"},
                        {"pipedreams", to_json(from_dreams)},
                        {"divdiff", to_json(from_divdiff)},
                        {"equal", equal}});
        } else {
            std::cout << "pipedreams: " << to_string(from_dreams) << "\n";
            std::cout << "divdiff:    " << to_string(from_divdiff) << "\n";
            std::cout << "equal: " << (equal ? "yes" : "NO") << "\n";
        }
        return equal ? 0 : 1;
    }
    const Polynomial poly =
        method == "divdiff" ? schubert_divdiff(w) : schubert_from_pipedreams(w);
    if (format == "json")
        print_json({{"word", w.word()}, {"method", method}, {"polynomial", to_json(poly)}});
    else
        std::cout << to_string(poly) << "\n";
    return 0;
}

int run_pipedreams(const Permutation& w, bool count_only, bool as_json) {
    const std::vector<PipeDream> dreams = enumerate_rp(w);
    if (count_only) {
        std::cout << dreams.size() << "\n";
        return 0;
    }
    if (as_json) {
        json list = json::array();
        for (const PipeDream& p : dreams) list.push_back(to_json(p));
        print_json({{"word", w.word()}, {"count", dreams.size()}, {"pipe_dreams", list}});
        return 0;
    }
    std::cout << "nu(" << w.str() << ") = " << dreams.size() << "\n";
    for (std::size_t k = 0; k < dreams.size(); ++k) {
        std::cout << "#" << (k + 1) << "  weight " << weight(dreams[k]).str() << "\n";
        const std::string art = ascii_render(dreams[k]);
        if (!art.empty()) std::cout << art << "\n";
    }
    return 0;
}

int run_path(const Permutation& w, unsigned seed, const std::string& format) {
    const PathReport report = find_simple_path(w, seed);
    if (format == "json") {
        print_json(to_json(report));
        return 0;
    }
    std::cout << "permutation: " << w.str() << "\n";
    std::cout << "eta: " << eta(w) << "\n";
    std::cout << "bottom pipe dream:\n";
    const std::string bottom_art = ascii_render(bottom_pipe_dream(w));
    if (!bottom_art.empty()) std::cout << bottom_art << "\n";
    for (std::size_t k = 0; k < report.steps.size(); ++k) {
        const PathStep& step = report.steps[k];
        const Cell tag = step.before.label_at(step.move.source());
        std::cout << "step " << (k + 1) << ": " << move_str(step.move) << " label "
                  << cell_str(tag) << ": " << cell_str(step.move.source()) << " -> "
                  << cell_str(step.move.target()) << "\n";
    }
    std::cout << "top pipe dream:\n";
    const std::string top_art = ascii_render(report.final_state.dream());
    if (!top_art.empty()) std::cout << top_art << "\n";
    std::cout << "label move counts (count / rank):\n";
    for (const auto& [cell, count] : report.move_counts)
        std::cout << "  " << cell_str(cell) << ": " << count << " / "
                  << rank(w, cell.row, cell.col) << "\n";
    std::cout << "total moves N = " << report.total_moves << ", eta = " << eta(w) << "\n";
    return 0;
}

int run_verify(int n, const std::string& check, bool force, const std::string& format) {
    if (n < 1) {
        std::cerr << "error: --n must be >= 1\n";
        return 2;
    }
    if (n > 8 && !force) {
        std::cerr << "error: refusing --n " << n << " (> 8) without --force\n";
        return 2;
    }
    bool passed = true;
    json checks = json::array();
    std::string text;
    if (check == "oracles" || check == "all") {
        const OraclesReport report = verify_oracles(n);
        passed = passed && report.passed();
        checks.push_back(to_json(report));
        text += to_text(report);
    }
    if (check == "bound" || check == "all") {
        const BoundReport report = verify_bound(n);
        passed = passed && report.passed();
        checks.push_back(to_json(report));
        text += to_text(report);
    }
    if (check == "stanley" || check == "all") {
        const StanleyReport report = verify_stanley(n);
        passed = passed && report.passed();
        checks.push_back(to_json(report));
        text += to_text(report);
    }
    if (format == "json") {
        print_json({{"n", n}, {"checks", checks}, {"passed", passed}});
    } else {
        std::cout << text;
        std::cout << "verify: " << (passed ? "pass" : "FAIL") << "\n";
    }
    return passed ? 0 : 1;
}

int run_graph(const Permutation& w, const std::string& format) {
    const LadderGraph graph = ladder_graph(w);
    if (format == "json")
        print_json(to_json(graph));
    else
        std::cout << to_dot(graph);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schubert polynomials via pipe dreams and divided differences"};
    app.require_subcommand(1);

    std::string info_word;
    std::string info_format = "text";
    CLI::App* info = app.add_subcommand("info", "diagram, rank table, and 132-pattern statistics");
    info->add_option("perm", info_word, "permutation in one-line notation")->required();
    info->add_option("--format", info_format)->check(CLI::IsMember({"text", "json"}));

    std::string schubert_word;
    std::string schubert_method = "pipedreams";
    std::string schubert_format = "text";
    CLI::App* schubert_cmd = app.add_subcommand("schubert", "Schubert polynomial of a permutation");
    schubert_cmd->add_option("perm", schubert_word)->required();
    schubert_cmd->add_option("--method", schubert_method)
        ->check(CLI::IsMember({"pipedreams", "divdiff", "both"}));
    schubert_cmd->add_option("--format", schubert_format)->check(CLI::IsMember({"text", "json"}));

    std::string dreams_word;
    bool dreams_count = false;
    bool dreams_ascii = false;
    bool dreams_json = false;
    CLI::App* dreams = app.add_subcommand("pipedreams", "list or count the reduced pipe dreams");
    dreams->add_option("perm", dreams_word)->required();
    dreams->add_flag("--count", dreams_count, "print only the number of pipe dreams");
    dreams->add_flag("--ascii", dreams_ascii, "ASCII listing (default)");
    dreams->add_flag("--json", dreams_json, "JSON listing");

    std::string path_word;
    std::string path_format = "text";
    unsigned path_seed = 0;
    CLI::App* path = app.add_subcommand("path", "simple-ladder path from bottom to top");
    path->add_option("perm", path_word)->required();
    path->add_option("--seed", path_seed, "seed for sampling the path");
    path->add_option("--format", path_format)->check(CLI::IsMember({"text", "json"}));

    int verify_n = 0;
    std::string verify_check = "all";
    std::string verify_format = "text";
    bool verify_force = false;
    CLI::App* verify = app.add_subcommand("verify", "exhaustive checks over S_n");
    verify->add_option("--n", verify_n, "symmetric group size")->required();
    verify->add_option("--check", verify_check)
        ->check(CLI::IsMember({"bound", "stanley", "oracles", "all"}));
    verify->add_flag("--force", verify_force, "allow n > 8");
    verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));

    std::string graph_word;
    std::string graph_format = "dot";
    CLI::App* graph = app.add_subcommand("graph", "ladder-move graph of the reduced pipe dreams");
    graph->add_option("perm", graph_word)->required();
    graph->add_option("--format", graph_format)->check(CLI::IsMember({"dot", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*info) return run_info(parse_permutation(info_word), info_format);
        if (*schubert_cmd)
            return run_schubert(parse_permutation(schubert_word), schubert_method,
                                schubert_format);
        if (*dreams) {
            const bool as_json = dreams_json && !dreams_count && !dreams_ascii;
            return run_pipedreams(parse_permutation(dreams_word), dreams_count, as_json);
        }
        if (*path) return run_path(parse_permutation(path_word), path_seed, path_format);
        if (*verify) return run_verify(verify_n, verify_check, verify_force, verify_format);
        if (*graph) return run_graph(parse_permutation(graph_word), graph_format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
