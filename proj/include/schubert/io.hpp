#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "schubert/enumeration.hpp"
#include "schubert/labeled_path.hpp"
#include "schubert/monomial.hpp"
#include "schubert/permutation.hpp"
#include "schubert/pipe_dream.hpp"
#include "schubert/polynomial.hpp"

// Stable machine-readable interfaces: JSON encodings for every data model,
// the matching parsers (every emitted document parses back into the model
// it came from), Graphviz DOT for ladder graphs, and the permutation
// parser shared by the CLI.  JSON documents are schema-stable; arrays are
// emitted in the canonical orders the library maintains.

namespace schubert {

inline Permutation parse_permutation(const std::string& text) {
    std::vector<int> word;
    if (text.find(',') != std::string::npos) {
        std::istringstream in(text);
        std::string piece;
        while (std::getline(in, piece, ',')) {
            const auto from = piece.find_first_not_of(" \t");
            const auto to = piece.find_last_not_of(" \t");
            if (from == std::string::npos)
                throw std::invalid_argument("parse_permutation: empty entry in '" + text + "'");
            piece = piece.substr(from, to - from + 1);
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(piece, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("parse_permutation: bad entry '" + piece + "'");
            }
            if (used != piece.size())
                throw std::invalid_argument("parse_permutation: bad entry '" + piece + "'");
            word.push_back(value);
        }
        if (!text.empty() && text.back() == ',')
            throw std::invalid_argument("parse_permutation: trailing comma in '" + text + "'");
    } else {
        for (char ch : text) {
            if (ch < '1' || ch > '9')
                throw std::invalid_argument(
                    "parse_permutation: contiguous form allows digits 1-9 only; "
                    "use commas for larger entries");
            word.push_back(ch - '0');
        }
    }
    return Permutation(std::move(word));  // rejects non-rearrangements
}

// --- JSON encodings ---------------------------------------------------

inline nlohmann::json to_json(const Permutation& w) { return nlohmann::json(w.word()); }

inline Permutation permutation_from_json(const nlohmann::json& j) {
    return Permutation(j.get<std::vector<int>>());
}

inline nlohmann::json to_json(Cell c) { return nlohmann::json::array({c.row, c.col}); }

inline Cell cell_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("cell: expected [row, col]");
    return {j[0].get<int>(), j[1].get<int>()};
}

inline nlohmann::json to_json(const CellSet& cells) {
    nlohmann::json out = nlohmann::json::array();
    for (Cell c : cells) out.push_back(to_json(c));
    return out;
}

inline CellSet cell_set_from_json(const nlohmann::json& j) {
    std::vector<Cell> cells;
    for (const auto& item : j) cells.push_back(cell_from_json(item));
    return CellSet(std::move(cells));
}

inline nlohmann::json to_json(const Monomial& m) { return nlohmann::json(m.exponents()); }

inline Monomial monomial_from_json(const nlohmann::json& j) {
    return Monomial(j.get<std::vector<int>>());
}

inline nlohmann::json to_json(const Polynomial& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : f.terms())
        terms.push_back({{"coefficient", c}, {"exponents", m.exponents()}});
    return terms;
}

inline Polynomial polynomial_from_json(const nlohmann::json& j) {
    Polynomial f;
    for (const auto& term : j)
        f.add_term(Monomial(term.at("exponents").get<std::vector<int>>()),
                   term.at("coefficient").get<std::int64_t>());
    return f;
}

inline nlohmann::json to_json(const PipeDream& p) {
    return {{"staircase_bound", p.staircase_bound()}, {"crosses", to_json(p.crosses())}};
}

inline PipeDream pipe_dream_from_json(const nlohmann::json& j) {
    return PipeDream(cell_set_from_json(j.at("crosses")), j.at("staircase_bound").get<int>());
}

inline nlohmann::json to_json(const LadderMove& mv) {
    return {{"anchor_row", mv.anchor_row}, {"anchor_col", mv.anchor_col}, {"rungs", mv.rungs}};
}

inline LadderMove ladder_move_from_json(const nlohmann::json& j) {
    return {j.at("anchor_row").get<int>(), j.at("anchor_col").get<int>(),
            j.at("rungs").get<int>()};
}

inline nlohmann::json to_json(const LabeledPipeDream& labeled) {
    nlohmann::json labels = nlohmann::json::array();
    for (const auto& [cross, tag] : labeled.labels())
        labels.push_back({{"cross", to_json(cross)}, {"label", to_json(tag)}});
    return {{"dream", to_json(labeled.dream())}, {"labels", labels}};
}

inline LabeledPipeDream labeled_pipe_dream_from_json(const nlohmann::json& j) {
    LabeledPipeDream::LabelMap labels;
    for (const auto& item : j.at("labels"))
        labels.emplace(cell_from_json(item.at("cross")), cell_from_json(item.at("label")));
    return {pipe_dream_from_json(j.at("dream")), std::move(labels)};
}

inline nlohmann::json to_json(const LadderGraph& graph) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const PipeDream& p : graph.nodes)
        nodes.push_back(
            {{"crosses", to_json(p.crosses())}, {"weight_exponents", weight(p).exponents()}});
    nlohmann::json edges = nlohmann::json::array();
    for (const LadderGraphEdge& e : graph.edges)
        edges.push_back({{"source", e.source},
                         {"target", e.target},
                         {"move", to_json(e.move)},
                         {"simple", e.move.simple()}});
    return {{"word", graph.wiring.word()},
            {"staircase_bound", graph.wiring.size()},
            {"nodes", nodes},
            {"edges", edges}};
}

inline LadderGraph ladder_graph_from_json(const nlohmann::json& j) {
    LadderGraph graph{permutation_from_json(j.at("word")), {}, {}};
    const int bound = j.at("staircase_bound").get<int>();
    for (const auto& node : j.at("nodes"))
        graph.nodes.emplace_back(cell_set_from_json(node.at("crosses")), bound);
    for (const auto& edge : j.at("edges"))
        graph.edges.push_back({edge.at("source").get<int>(), edge.at("target").get<int>(),
                               ladder_move_from_json(edge.at("move"))});
    return graph;
}

inline nlohmann::json to_json(const PathReport& report) {
    nlohmann::json steps = nlohmann::json::array();
    for (const PathStep& step : report.steps)
        steps.push_back({{"before", to_json(step.before)}, {"move", to_json(step.move)}});
    nlohmann::json counts = nlohmann::json::array();
    for (const auto& [cell, count] : report.move_counts)
        counts.push_back({{"label", to_json(cell)}, {"count", count}});
    return {{"word", report.permutation.word()},
            {"steps", steps},
            {"final", to_json(report.final_state)},
            {"move_counts", counts},
            {"total_moves", report.total_moves}};
}

inline PathReport path_report_from_json(const nlohmann::json& j) {
    std::vector<PathStep> steps;
    for (const auto& step : j.at("steps"))
        steps.push_back({labeled_pipe_dream_from_json(step.at("before")),
                         ladder_move_from_json(step.at("move"))});
    std::map<Cell, long long> counts;
    for (const auto& item : j.at("move_counts"))
        counts.emplace(cell_from_json(item.at("label")), item.at("count").get<long long>());
    return {permutation_from_json(j.at("word")), std::move(steps),
            labeled_pipe_dream_from_json(j.at("final")), std::move(counts),
            j.at("total_moves").get<long long>()};
}

inline nlohmann::json to_json(const SweepRecord& r) {
    return {{"word", r.word}, {"eta", r.eta},   {"nu", r.nu},
            {"slack", r.slack}, {"path_length", r.path_length}};
}

inline SweepRecord sweep_record_from_json(const nlohmann::json& j) {
    return {j.at("word").get<std::vector<int>>(), j.at("eta").get<long long>(),
            j.at("nu").get<long long>(), j.at("slack").get<long long>(),
            j.at("path_length").get<long long>()};
}

inline nlohmann::json to_json(const BoundReport& report) {
    nlohmann::json slack = nlohmann::json::array();
    for (const auto& [value, count] : report.slack_histogram)
        slack.push_back({{"slack", value}, {"count", count}});
    nlohmann::json records = nlohmann::json::array();
    for (const SweepRecord& r : report.records) records.push_back(to_json(r));
    return {{"check", "bound"},
            {"n", report.n},
            {"count", report.count},
            {"passed", report.passed()},
            {"violations", report.violations},
            {"path_mismatches", report.path_mismatches},
            {"slack_distribution", slack},
            {"records", records}};
}

inline BoundReport bound_report_from_json(const nlohmann::json& j) {
    BoundReport report;
    report.n = j.at("n").get<int>();
    report.count = j.at("count").get<long long>();
    report.violations = j.at("violations").get<std::vector<std::vector<int>>>();
    report.path_mismatches = j.at("path_mismatches").get<std::vector<std::vector<int>>>();
    for (const auto& item : j.at("slack_distribution"))
        report.slack_histogram.emplace(item.at("slack").get<long long>(),
                                       item.at("count").get<long long>());
    for (const auto& item : j.at("records")) report.records.push_back(sweep_record_from_json(item));
    return report;
}

inline nlohmann::json to_json(const StanleyReport& report) {
    nlohmann::json records = nlohmann::json::array();
    for (const SweepRecord& r : report.records) records.push_back(to_json(r));
    return {{"check", "stanley"},
            {"n", report.n},
            {"count", report.count},
            {"passed", report.passed()},
            {"counterexamples",
             {{"eta1_nu_not2", report.eta1_nu_not2},
              {"nu2_eta_not1", report.nu2_eta_not1},
              {"eta0_nu_not1", report.eta0_nu_not1},
              {"nu1_eta_not0", report.nu1_eta_not0}}},
            {"records", records}};
}

inline StanleyReport stanley_report_from_json(const nlohmann::json& j) {
    StanleyReport report;
    report.n = j.at("n").get<int>();
    report.count = j.at("count").get<long long>();
    const auto& cx = j.at("counterexamples");
    report.eta1_nu_not2 = cx.at("eta1_nu_not2").get<std::vector<std::vector<int>>>();
    report.nu2_eta_not1 = cx.at("nu2_eta_not1").get<std::vector<std::vector<int>>>();
    report.eta0_nu_not1 = cx.at("eta0_nu_not1").get<std::vector<std::vector<int>>>();
    report.nu1_eta_not0 = cx.at("nu1_eta_not0").get<std::vector<std::vector<int>>>();
    for (const auto& item : j.at("records")) report.records.push_back(sweep_record_from_json(item));
    return report;
}

inline nlohmann::json to_json(const OraclesReport& report) {
    return {{"check", "oracles"},
            {"n", report.n},
            {"count", report.count},
            {"passed", report.passed()},
            {"polynomial_mismatches", report.polynomial_mismatches},
            {"eta_mismatches", report.eta_mismatches}};
}

inline OraclesReport oracles_report_from_json(const nlohmann::json& j) {
    OraclesReport report;
    report.n = j.at("n").get<int>();
    report.count = j.at("count").get<long long>();
    report.polynomial_mismatches =
        j.at("polynomial_mismatches").get<std::vector<std::vector<int>>>();
    report.eta_mismatches = j.at("eta_mismatches").get<std::vector<std::vector<int>>>();
    return report;
}

// --- Graphviz ----------------------------------------------------------

namespace detail {

inline std::string dot_escape_multiline(const std::string& text) {
    std::string out;
    for (char ch : text) {
        if (ch == '\n') {
            out += "\\l";
        } else {
            if (ch == '"' || ch == '\\') out += '\\';
            out += ch;
        }
    }
    out += "\\l";
    return out;
}

}  // namespace detail

/// DOT rendering of a ladder graph: node labels show the pipe dream and its
/// weight monomial; simple moves are solid edges, non-simple ones dashed.
inline std::string to_dot(const LadderGraph& graph) {
    std::ostringstream out;
    out << "digraph ladder_moves {\n";
    out << "  graph [label=\"ladder moves of " << graph.wiring.str() << "\"];\n";
    out << "  node [shape=box, fontname=\"Courier\"];\n";
    for (std::size_t k = 0; k < graph.nodes.size(); ++k) {
        const PipeDream& p = graph.nodes[k];
        std::string art = ascii_render(p);
        if (!art.empty()) art += '\n';
        art += weight(p).str();
        out << "  n" << k << " [label=\"" << detail::dot_escape_multiline(art) << "\"];\n";
    }
    for (const LadderGraphEdge& e : graph.edges) {
        out << "  n" << e.source << " -> n" << e.target << " [label=\"(" << e.move.anchor_row
            << "," << e.move.anchor_col << "," << e.move.rungs << ")\", style="
            << (e.move.simple() ? "solid" : "dashed") << "];\n";
    }
    out << "}\n";
    return out.str();
}

// --- Text reports -------------------------------------------------------

inline std::string to_text(const BoundReport& report) {
    std::ostringstream out;
    out << "bound check on S_" << report.n << ": " << report.count << " permutations, "
        << report.violations.size() << " violations, " << report.path_mismatches.size()
        << " path-length mismatches -> " << (report.passed() ? "pass" : "FAIL") << "\n";
    out << "  slack (nu - eta - 1) distribution:\n";
    for (const auto& [slack, count] : report.slack_histogram)
        out << "    slack " << slack << ": " << count << "\n";
    for (const auto& word : report.violations)
        out << "  violation: " << Permutation(word).str() << "\n";
    for (const auto& word : report.path_mismatches)
        out << "  path-length mismatch: " << Permutation(word).str() << "\n";
    return out.str();
}

inline std::string to_text(const StanleyReport& report) {
    std::ostringstream out;
    out << "stanley check on S_" << report.n << ": " << report.count << " permutations, "
        << (report.eta1_nu_not2.size() + report.nu2_eta_not1.size() + report.eta0_nu_not1.size() +
            report.nu1_eta_not0.size())
        << " counterexamples -> " << (report.passed() ? "pass" : "FAIL") << "\n";
    auto dump = [&](const char* tag, const std::vector<std::vector<int>>& words) {
        for (const auto& word : words) out << "  " << tag << ": " << Permutation(word).str() << "\n";
    };
    dump("eta=1 but nu!=2", report.eta1_nu_not2);
    dump("nu=2 but eta!=1", report.nu2_eta_not1);
    dump("eta=0 but nu!=1", report.eta0_nu_not1);
    dump("nu=1 but eta!=0", report.nu1_eta_not0);
    return out.str();
}

inline std::string to_text(const OraclesReport& report) {
    std::ostringstream out;
    out << "oracle check on S_" << report.n << ": " << report.count << " permutations, "
        << report.polynomial_mismatches.size() << " polynomial mismatches, "
        << report.eta_mismatches.size() << " eta mismatches -> "
        << (report.passed() ? "pass" : "FAIL") << "\n";
    for (const auto& word : report.polynomial_mismatches)
        out << "  polynomial mismatch: " << Permutation(word).str() << "\n";
    for (const auto& word : report.eta_mismatches)
        out << "  eta mismatch: " << Permutation(word).str() << "\n";
    return out.str();
}

}  // namespace schubert
