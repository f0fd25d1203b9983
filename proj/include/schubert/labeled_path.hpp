#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <random>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "schubert/enumeration.hpp"
#include "schubert/permutation.hpp"
#include "schubert/pipe_dream.hpp"

// Labeled pipe dreams and simple-ladder paths from the bottom pipe dream to
// the top one.
//
// A labeling tags each cross with the Rothe-diagram cell it stands for.
// Along a simple ladder move the new cross inherits the label of the
// removed one (which sits one row down and one column left), and the
// terminal labeling at the top pipe dream is forced: it never depends on
// which simple path was taken.  Each simple move lifts exactly one label by
// one row, and the label of diagram cell (i,j) must climb r_w(i,j) rows in
// total, so every simple path from bottom to top has exactly eta(w) steps.
// The sweep verifiers below check all of this exhaustively.

namespace schubert {

class LabeledPipeDream {
public:
    using LabelMap = std::map<Cell, Cell>;  // cross -> diagram cell

    LabeledPipeDream(PipeDream dream, LabelMap labels)
        : dream_(std::move(dream)), labels_(std::move(labels)) {
        if (labels_.size() != dream_.size())
            throw std::logic_error("LabeledPipeDream: labeling is not total on the cross set");
        std::vector<Cell> values;
        for (const auto& [cross, label] : labels_) {
            if (!dream_.contains(cross))
                throw std::logic_error("LabeledPipeDream: label attached to a missing cross");
            values.push_back(label);
        }
        std::sort(values.begin(), values.end());
        if (std::adjacent_find(values.begin(), values.end()) != values.end())
            throw std::logic_error("LabeledPipeDream: labeling is not injective");
    }

    const PipeDream& dream() const { return dream_; }
    const LabelMap& labels() const { return labels_; }

    Cell label_at(Cell cross) const {
        auto it = labels_.find(cross);
        if (it == labels_.end())
            throw std::out_of_range("LabeledPipeDream: no cross at the requested cell");
        return it->second;
    }

    bool operator==(const LabeledPipeDream&) const = default;

private:
    PipeDream dream_;
    LabelMap labels_;
};

/// Bottom pipe dream labeled through (i,j) -> (i, j - r_w(i,j)).
inline LabeledPipeDream initial_labeling(const Permutation& w) {
    LabeledPipeDream::LabelMap labels;
    for (Cell d : rothe_diagram(w)) {
        Cell cross{d.row, d.col - rank(w, d.row, d.col)};
        if (!labels.emplace(cross, d).second)
            throw std::logic_error("initial_labeling: diagram cells collide on one cross");
    }
    return {bottom_pipe_dream(w), std::move(labels)};
}

/// Top pipe dream labeled through (i,j) -> (i - r_w(i,j), j).
inline LabeledPipeDream target_labeling(const Permutation& w) {
    LabeledPipeDream::LabelMap labels;
    for (Cell d : rothe_diagram(w)) {
        Cell cross{d.row - rank(w, d.row, d.col), d.col};
        if (!labels.emplace(cross, d).second)
            throw std::logic_error("target_labeling: diagram cells collide on one cross");
    }
    return {top_pipe_dream(w), std::move(labels)};
}

/// Transports the labeling across a simple ladder move: the added cross
/// takes the label of the removed one, everything else is unchanged.
inline LabeledPipeDream inherit_label(const LabeledPipeDream& labeled, const LadderMove& mv) {
    if (!mv.simple())
        throw std::invalid_argument("inherit_label: labels transport only along simple moves");
    PipeDream next = apply_ladder_move(labeled.dream(), mv);  // validates the move
    LabeledPipeDream::LabelMap labels = labeled.labels();
    auto it = labels.find(mv.source());
    Cell tag = it->second;
    labels.erase(it);
    labels.emplace(mv.target(), tag);
    return {std::move(next), std::move(labels)};
}

struct PathStep {
    LabeledPipeDream before;  // state the move is applied to
    LadderMove move;

    bool operator==(const PathStep&) const = default;
};

// One simple-ladder path from the bottom pipe dream to the top one, with
// the labels carried along.  total_moves == steps.size() and equals the sum
// of move_counts, which holds one entry per Rothe-diagram cell.
struct PathReport {
    Permutation permutation;
    std::vector<PathStep> steps;
    LabeledPipeDream final_state;
    std::map<Cell, long long> move_counts;
    long long total_moves = 0;

    bool operator==(const PathReport&) const = default;
};

// Depth-first search over simple moves with visited-set pruning.  The seed
// shuffles the expansion order, which samples different paths; any path
// found is as short as every other one.  Reaching the top is guaranteed,
// so failure to do so throws.
inline PathReport find_simple_path(const Permutation& w, unsigned seed = 0) {
    const LabeledPipeDream start = initial_labeling(w);
    const PipeDream goal = top_pipe_dream(w);
    std::mt19937 rng(seed);

    auto simple_moves = [&rng](const PipeDream& p) {
        std::vector<LadderMove> moves;
        for (const LadderMove& mv : valid_ladder_moves(p))
            if (mv.simple()) moves.push_back(mv);
        std::shuffle(moves.begin(), moves.end(), rng);
        return moves;
    };

    std::vector<LadderMove> path;
    if (start.dream() != goal) {
        struct Frame {
            PipeDream dream;
            std::vector<LadderMove> moves;
            std::size_t next = 0;
        };
        std::unordered_set<PipeDream, PipeDreamHash> visited{start.dream()};
        std::vector<Frame> stack;
        stack.push_back({start.dream(), simple_moves(start.dream()), 0});
        bool found = false;
        while (!stack.empty()) {
            Frame& top = stack.back();
            if (top.next >= top.moves.size()) {
                stack.pop_back();
                if (!path.empty()) path.pop_back();
                continue;
            }
            const LadderMove mv = top.moves[top.next++];
            PipeDream child = apply_ladder_move(top.dream, mv);
            if (!visited.insert(child).second) continue;
            path.push_back(mv);
            if (child == goal) {
                found = true;
                break;
            }
            auto moves = simple_moves(child);
            stack.push_back({std::move(child), std::move(moves), 0});
        }
        if (!found)
            throw std::logic_error(
                "find_simple_path: top pipe dream unreachable by simple ladder moves; "
                "this indicates a defect in the move generation");
    }

    std::map<Cell, long long> counts;
    for (Cell d : rothe_diagram(w)) counts.emplace(d, 0);
    std::vector<PathStep> steps;
    steps.reserve(path.size());
    LabeledPipeDream current = start;
    for (const LadderMove& mv : path) {
        steps.push_back({current, mv});
        ++counts.at(current.label_at(mv.source()));
        current = inherit_label(current, mv);
    }
    if (!(current == target_labeling(w)))
        throw std::logic_error(
            "find_simple_path: transported labeling disagrees with the top labeling");
    return {w, std::move(steps), std::move(current), std::move(counts),
            static_cast<long long>(path.size())};
}

/// True iff along a simple path every diagram cell's label moves exactly
/// r_w(i,j) times.
inline bool verify_claim_plusrank(const Permutation& w, unsigned seed = 0) {
    const PathReport report = find_simple_path(w, seed);
    for (const auto& [cell, count] : report.move_counts)
        if (count != rank(w, cell.row, cell.col)) return false;
    return true;
}

struct SweepRecord {
    std::vector<int> word;
    long long eta = 0;
    long long nu = 0;
    long long slack = 0;        // nu - eta - 1
    long long path_length = 0;  // steps of the simple-ladder path found

    friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

// Exhaustive check of nu(w) >= eta(w) + 1 over S_n.  nu comes from the
// breadth-first enumeration and eta from the triple scan; the two sides
// share no code.  The path length is recorded as a third, independent
// cross-check: it must equal eta exactly.
struct BoundReport {
    int n = 0;
    long long count = 0;
    std::vector<std::vector<int>> violations;       // nu < eta + 1
    std::vector<std::vector<int>> path_mismatches;  // path length != eta
    std::map<long long, long long> slack_histogram;
    std::vector<SweepRecord> records;

    bool passed() const { return violations.empty() && path_mismatches.empty(); }

    friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

inline BoundReport verify_bound(int n) {
    BoundReport report;
    report.n = n;
    for_each_permutation(n, [&](const Permutation& w) {
        const long long e = eta(w);
        const long long v = nu(w);
        const long long steps = find_simple_path(w).total_moves;
        ++report.count;
        ++report.slack_histogram[v - e - 1];
        report.records.push_back({w.word(), e, v, v - e - 1, steps});
        if (v < e + 1) report.violations.push_back(w.word());
        if (steps != e) report.path_mismatches.push_back(w.word());
    });
    return report;
}

// Exhaustive check over S_n that {w : nu = 2} = {w : eta = 1}, plus the
// endpoint {w : eta = 0} = {w : nu = 1}.
struct StanleyReport {
    int n = 0;
    long long count = 0;
    std::vector<std::vector<int>> eta1_nu_not2;
    std::vector<std::vector<int>> nu2_eta_not1;
    std::vector<std::vector<int>> eta0_nu_not1;
    std::vector<std::vector<int>> nu1_eta_not0;
    std::vector<SweepRecord> records;

    bool passed() const {
        return eta1_nu_not2.empty() && nu2_eta_not1.empty() && eta0_nu_not1.empty() &&
               nu1_eta_not0.empty();
    }

    friend bool operator==(const StanleyReport&, const StanleyReport&) = default;
};

inline StanleyReport verify_stanley(int n) {
    StanleyReport report;
    report.n = n;
    for_each_permutation(n, [&](const Permutation& w) {
        const long long e = eta(w);
        const long long v = nu(w);
        const long long steps = find_simple_path(w).total_moves;
        ++report.count;
        report.records.push_back({w.word(), e, v, v - e - 1, steps});
        if (e == 1 && v != 2) report.eta1_nu_not2.push_back(w.word());
        if (v == 2 && e != 1) report.nu2_eta_not1.push_back(w.word());
        if (e == 0 && v != 1) report.eta0_nu_not1.push_back(w.word());
        if (v == 1 && e != 0) report.nu1_eta_not0.push_back(w.word());
    });
    return report;
}

}  // namespace schubert
