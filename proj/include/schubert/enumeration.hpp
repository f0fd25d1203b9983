#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "schubert/permutation.hpp"
#include "schubert/pipe_dream.hpp"
#include "schubert/polynomial.hpp"

// Enumeration of the reduced pipe dreams of a permutation by breadth-first
// closure of the bottom pipe dream under ladder moves, together with the
// pipe-dream route to the Schubert polynomial and the ladder-move graph.
//
// Completeness of the closure is never trusted on its own: the pipe-dream
// polynomial is checked against the divided-difference route by the tests
// and by `verify_oracles`, which certifies the enumeration end-to-end.

namespace schubert {

/// All reduced pipe dreams with wiring permutation w, sorted by cross set.
inline std::vector<PipeDream> enumerate_rp(const Permutation& w) {
    std::unordered_set<PipeDream, PipeDreamHash> visited;
    std::vector<const PipeDream*> frontier;
    auto seed = visited.insert(bottom_pipe_dream(w));
    frontier.push_back(&*seed.first);
    for (std::size_t head = 0; head < frontier.size(); ++head) {
        const PipeDream& p = *frontier[head];
        for (const LadderMove& mv : valid_ladder_moves(p)) {
            auto [it, fresh] = visited.insert(apply_ladder_move(p, mv));
            if (fresh) frontier.push_back(&*it);
        }
    }
    std::vector<PipeDream> out(visited.begin(), visited.end());
    std::sort(out.begin(), out.end());
    return out;
}

/// The principal specialization S_w(1,...,1) = number of reduced pipe dreams.
inline long long nu(const Permutation& w) {
    return static_cast<long long>(enumerate_rp(w).size());
}

/// Schubert polynomial as the weight sum over all reduced pipe dreams.
inline Polynomial schubert_from_pipedreams(const Permutation& w) {
    Polynomial out;
    for (const PipeDream& p : enumerate_rp(w)) out.add_term(weight(p), 1);
    return out;
}

struct LadderGraphEdge {
    int source = 0;
    int target = 0;
    LadderMove move;

    friend constexpr auto operator<=>(const LadderGraphEdge&, const LadderGraphEdge&) = default;
};

// All reduced pipe dreams of one permutation, with every valid ladder move
// between them.  Nodes are sorted by cross set and edges by (source, move),
// so identical inputs always produce identical graphs.  Edges are found by
// re-scanning every node, not just the breadth-first tree.
struct LadderGraph {
    Permutation wiring;
    std::vector<PipeDream> nodes;
    std::vector<LadderGraphEdge> edges;

    friend bool operator==(const LadderGraph&, const LadderGraph&) = default;
};

inline LadderGraph ladder_graph(const Permutation& w) {
    LadderGraph graph{w, enumerate_rp(w), {}};
    std::unordered_map<PipeDream, int, PipeDreamHash> index;
    for (std::size_t k = 0; k < graph.nodes.size(); ++k)
        index.emplace(graph.nodes[k], static_cast<int>(k));
    for (std::size_t k = 0; k < graph.nodes.size(); ++k) {
        for (const LadderMove& mv : valid_ladder_moves(graph.nodes[k])) {
            auto it = index.find(apply_ladder_move(graph.nodes[k], mv));
            if (it == index.end())
                throw std::logic_error("ladder_graph: move target missing from enumeration");
            graph.edges.push_back({static_cast<int>(k), it->second, mv});
        }
    }
    std::sort(graph.edges.begin(), graph.edges.end());
    return graph;
}

// Cross-oracle sweep over S_n: the pipe-dream polynomial must equal the
// divided-difference polynomial exactly, and the 132-count by triple scan
// must equal the rank-sum form.
struct OraclesReport {
    int n = 0;
    long long count = 0;
    std::vector<std::vector<int>> polynomial_mismatches;
    std::vector<std::vector<int>> eta_mismatches;

    bool passed() const { return polynomial_mismatches.empty() && eta_mismatches.empty(); }

    friend bool operator==(const OraclesReport&, const OraclesReport&) = default;
};

inline OraclesReport verify_oracles(int n) {
    OraclesReport report;
    report.n = n;
    SchubertCache cache;
    for_each_permutation(n, [&](const Permutation& w) {
        ++report.count;
        if (schubert_from_pipedreams(w) != cache.polynomial(w))
            report.polynomial_mismatches.push_back(w.word());
        if (eta(w) != eta_via_rank(w)) report.eta_mismatches.push_back(w.word());
    });
    return report;
}

}  // namespace schubert
