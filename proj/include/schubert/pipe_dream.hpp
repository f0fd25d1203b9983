#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schubert/monomial.hpp"
#include "schubert/permutation.hpp"

// Pipe dreams on the staircase region {(i,j) : i + j <= n}.  A pipe dream
// is identified with the set of its cross cells; every other cell of the
// ambient grid is an elbow.  Tile semantics for strand tracing: a cross
// joins west<->east and south<->north, an elbow joins west<->north and
// south<->east (a strand never bends at a right angle).  The staircase
// bound makes the type finite: the bottom pipe dream of any w in S_n fits
// inside it and ladder moves never leave it.

namespace schubert {

class PipeDream {
public:
    PipeDream(CellSet crosses, int staircase_bound)
        : bound_(staircase_bound), crosses_(std::move(crosses)) {
        if (bound_ < 1) throw std::invalid_argument("PipeDream: staircase bound must be >= 1");
        for (Cell c : crosses_)
            if (c.row + c.col > bound_)
                throw std::invalid_argument("PipeDream: cross (" + std::to_string(c.row) + "," +
                                            std::to_string(c.col) + ") outside staircase {i+j<=" +
                                            std::to_string(bound_) + "}");
    }

    int staircase_bound() const { return bound_; }
    const CellSet& crosses() const { return crosses_; }
    std::size_t size() const { return crosses_.size(); }
    bool contains(Cell c) const { return crosses_.contains(c); }

    friend auto operator<=>(const PipeDream&, const PipeDream&) = default;

private:
    int bound_;
    CellSet crosses_;
};

struct PipeDreamHash {
    std::size_t operator()(const PipeDream& p) const {
        std::size_t h = static_cast<std::size_t>(p.staircase_bound());
        for (Cell c : p.crosses())
            h = hash_combine(hash_combine(h, static_cast<std::size_t>(c.row)),
                             static_cast<std::size_t>(c.col));
        return h;
    }
};

// A ladder move, addressed by its anchor (the empty two-cell row at the
// top of the configuration) and the rung count m.  It removes the cross at
// (anchor_row + m + 1, anchor_col) and adds one at (anchor_row,
// anchor_col + 1); the rows in between must be double crosses.  m = 0 is a
// simple move.
struct LadderMove {
    int anchor_row = 0;
    int anchor_col = 0;
    int rungs = 0;

    Cell source() const { return {anchor_row + rungs + 1, anchor_col}; }
    Cell target() const { return {anchor_row, anchor_col + 1}; }
    bool simple() const { return rungs == 0; }

    friend constexpr auto operator<=>(const LadderMove&, const LadderMove&) = default;
};

namespace detail {

// Dense membership grid for hot scans; index (r,c) with 1 <= r,c <= n.
inline std::vector<char> cross_grid(const PipeDream& p) {
    const std::size_t stride = static_cast<std::size_t>(p.staircase_bound()) + 1;
    std::vector<char> grid(stride * stride, 0);
    for (Cell c : p.crosses())
        grid[static_cast<std::size_t>(c.row) * stride + static_cast<std::size_t>(c.col)] = 1;
    return grid;
}

}  // namespace detail

/// Bottom pipe dream: the Rothe diagram left-justified within rows,
/// i.e. {(i,j) : j <= m_i(w)}.
inline PipeDream bottom_pipe_dream(const Permutation& w) {
    const std::vector<int> m = m_vector(w);
    std::vector<Cell> cells;
    for (int i = 1; i <= w.size(); ++i)
        for (int j = 1; j <= m[static_cast<std::size_t>(i) - 1]; ++j) cells.push_back({i, j});
    return PipeDream(CellSet(std::move(cells)), w.size());
}

/// Top pipe dream: the transpose of the bottom pipe dream of w^{-1};
/// equivalently the Rothe diagram top-justified within columns.
inline PipeDream top_pipe_dream(const Permutation& w) {
    PipeDream bottom = bottom_pipe_dream(inverse(w));
    return PipeDream(transpose(bottom.crosses()), bottom.staircase_bound());
}

// Traces every strand from the west edge to its exit column on the north
// edge.  Cells outside the cross set act as elbows, including the cells
// beyond the staircase.  The result is a permutation of 1..staircase_bound
// whenever the crosses respect the staircase, which the PipeDream type
// guarantees.
inline Permutation wiring_permutation(const PipeDream& p) {
    const int n = p.staircase_bound();
    const std::size_t stride = static_cast<std::size_t>(n) + 1;
    const std::vector<char> grid = detail::cross_grid(p);
    std::vector<int> word(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int r = i;
        int c = 1;
        bool east = true;  // moving east (entered from the west) vs north
        while (r >= 1) {
            const bool cross = r <= n && c <= n &&
                               grid[static_cast<std::size_t>(r) * stride + static_cast<std::size_t>(c)];
            if (cross) {
                if (east)
                    ++c;
                else
                    --r;
            } else {
                if (east) {
                    --r;
                    east = false;
                } else {
                    ++c;
                    east = true;
                }
            }
        }
        word[static_cast<std::size_t>(i) - 1] = c;
    }
    return Permutation(std::move(word));
}

/// Reduced means the cross count equals the length of the wiring
/// permutation: no two strands cross twice.
inline bool is_reduced(const PipeDream& p) {
    return static_cast<int>(p.size()) == length(wiring_permutation(p));
}

/// Weight monomial: the exponent of x_i counts the crosses in row i.
inline Monomial weight(const PipeDream& p) {
    std::vector<int> exps;
    for (Cell c : p.crosses()) {
        if (static_cast<int>(exps.size()) < c.row) exps.resize(static_cast<std::size_t>(c.row), 0);
        ++exps[static_cast<std::size_t>(c.row) - 1];
    }
    return Monomial(std::move(exps));
}

/// Entry k (1-based) counts the crosses on the antidiagonal i + j - 1 = k,
/// for k = 1 .. staircase_bound - 1.
inline std::vector<int> antidiagonal_vector(const PipeDream& p) {
    std::vector<int> a(static_cast<std::size_t>(std::max(p.staircase_bound() - 1, 0)), 0);
    for (Cell c : p.crosses()) ++a[static_cast<std::size_t>(c.row + c.col - 1) - 1];
    return a;
}

inline bool is_valid_ladder_move(const PipeDream& p, const LadderMove& mv) {
    if (mv.anchor_row < 1 || mv.anchor_col < 1 || mv.rungs < 0) return false;
    const int i = mv.anchor_row;
    const int j = mv.anchor_col;
    if (p.contains({i, j}) || p.contains({i, j + 1})) return false;
    for (int r = i + 1; r <= i + mv.rungs; ++r)
        if (!p.contains({r, j}) || !p.contains({r, j + 1})) return false;
    if (!p.contains(mv.source())) return false;
    if (p.contains({mv.source().row, j + 1})) return false;
    // The target stays inside the staircase automatically: the source lies
    // in the region, so anchor_row + (anchor_col + 1) <= bound - rungs.
    return true;
}

/// Every valid ladder move on p, for all rung counts m >= 0, sorted by
/// (anchor_row, anchor_col, rungs).
inline std::vector<LadderMove> valid_ladder_moves(const PipeDream& p) {
    const int n = p.staircase_bound();
    const std::size_t stride = static_cast<std::size_t>(n) + 1;
    const std::vector<char> grid = detail::cross_grid(p);
    const auto at = [&](int r, int c) {
        return r >= 1 && r <= n && c >= 1 && c <= n &&
               grid[static_cast<std::size_t>(r) * stride + static_cast<std::size_t>(c)] != 0;
    };
    std::vector<LadderMove> moves;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j + i <= n; ++j) {
            if (at(i, j) || at(i, j + 1)) continue;
            for (int m = 0;; ++m) {
                const int src = i + m + 1;
                if (src + j > n) break;
                if (m >= 1 && !(at(i + m, j) && at(i + m, j + 1))) break;
                if (at(src, j) && !at(src, j + 1)) moves.push_back({i, j, m});
            }
        }
    }
    return moves;
}

/// Applies a ladder move; the wiring permutation and cross count are
/// preserved, so reducedness is too.  Rejects moves whose preconditions
/// fail on p.
inline PipeDream apply_ladder_move(const PipeDream& p, const LadderMove& mv) {
    if (!is_valid_ladder_move(p, mv))
        throw std::invalid_argument("apply_ladder_move: move (" + std::to_string(mv.anchor_row) +
                                    "," + std::to_string(mv.anchor_col) + ",m=" +
                                    std::to_string(mv.rungs) + ") is not valid on this pipe dream");
    CellSet crosses = p.crosses();
    crosses.erase(mv.source());
    crosses.insert(mv.target());
    return PipeDream(std::move(crosses), p.staircase_bound());
}

/// Row-major picture of the staircase, crosses as '+', elbows as '.'.
inline std::string ascii_render(const PipeDream& p) {
    const int n = p.staircase_bound();
    std::string out;
    for (int i = 1; i <= n - 1; ++i) {
        if (i > 1) out += '\n';
        for (int j = 1; i + j <= n; ++j) out += p.contains({i, j}) ? '+' : '.';
    }
    return out;
}

}  // namespace schubert
