#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Permutations in one-line notation together with the grid combinatorics
// attached to them: Rothe diagrams, rank functions, Lehmer codes, and
// 132-pattern occurrences.
//
// Everything is 1-based.  A permutation of {1,...,n} is the word
// w(1) w(2) ... w(n); grid cells are (row, column) pairs in matrix
// orientation (row 1 at the top).  All values are immutable after
// construction and all operations are pure functions.

namespace schubert {

struct Cell {
    int row = 0;
    int col = 0;

    friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

// Finite set of grid cells with coordinates >= 1.  Kept sorted and
// duplicate-free, so equal sets compare equal and iteration order is
// deterministic.
class CellSet {
public:
    CellSet() = default;

    CellSet(std::initializer_list<Cell> cells) : CellSet(std::vector<Cell>(cells)) {}

    explicit CellSet(std::vector<Cell> cells) : cells_(std::move(cells)) {
        for (const Cell& c : cells_) check_coords(c);
        std::sort(cells_.begin(), cells_.end());
        cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    }

    bool contains(Cell c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

    void insert(Cell c) {
        check_coords(c);
        auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
        if (it == cells_.end() || *it != c) cells_.insert(it, c);
    }

    void erase(Cell c) {
        auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
        if (it != cells_.end() && *it == c) cells_.erase(it);
    }

    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    auto begin() const { return cells_.begin(); }
    auto end() const { return cells_.end(); }
    const std::vector<Cell>& cells() const { return cells_; }

    friend auto operator<=>(const CellSet&, const CellSet&) = default;

private:
    static void check_coords(Cell c) {
        if (c.row < 1 || c.col < 1)
            throw std::invalid_argument("CellSet: cell coordinates must be >= 1");
    }

    std::vector<Cell> cells_;
};

/// Reflects a cell set across the main diagonal: (i,j) -> (j,i).
inline CellSet transpose(const CellSet& s) {
    std::vector<Cell> out;
    out.reserve(s.size());
    for (Cell c : s) out.push_back({c.col, c.row});
    return CellSet(std::move(out));
}

// A permutation of {1,...,n} in one-line notation.  The representative n
// is always the word's length; nothing silently extends to a larger
// symmetric group.  Construction rejects words that are not a
// rearrangement of 1..n.
class Permutation {
public:
    explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
        const int n = static_cast<int>(word_.size());
        if (n == 0) throw std::invalid_argument("Permutation: word must be nonempty");
        std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
        for (int v : word_) {
            if (v < 1 || v > n)
                throw std::invalid_argument("Permutation: entry " + std::to_string(v) +
                                            " outside 1.." + std::to_string(n));
            if (seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("Permutation: duplicate entry " + std::to_string(v));
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> word(check_size(n));
        std::iota(word.begin(), word.end(), 1);
        return Permutation(std::move(word));
    }

    /// The longest element n n-1 ... 1.
    static Permutation longest(int n) {
        std::vector<int> word(check_size(n));
        std::iota(word.rbegin(), word.rend(), 1);
        return Permutation(std::move(word));
    }

    int size() const { return static_cast<int>(word_.size()); }

    /// Value at position i (1-based).
    int operator()(int i) const {
        if (i < 1 || i > size()) throw std::out_of_range("Permutation: position out of range");
        return word_[static_cast<std::size_t>(i) - 1];
    }

    const std::vector<int>& word() const { return word_; }

    /// Compact display form: contiguous digits up to S_9, else comma-separated.
    std::string str() const {
        std::string out;
        for (std::size_t k = 0; k < word_.size(); ++k) {
            if (k > 0 && word_.size() > 9) out += ',';
            out += std::to_string(word_[k]);
        }
        return out;
    }

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    static std::size_t check_size(int n) {
        if (n < 1) throw std::invalid_argument("Permutation: n must be >= 1");
        return static_cast<std::size_t>(n);
    }

    std::vector<int> word_;
};

inline Permutation inverse(const Permutation& w) {
    const int n = w.size();
    std::vector<int> word(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) word[static_cast<std::size_t>(w(i)) - 1] = i;
    return Permutation(std::move(word));
}

/// Coxeter length: the number of inversions, #{(i,j) : i < j, w(i) > w(j)}.
inline int length(const Permutation& w) {
    const auto& a = w.word();
    const int n = w.size();
    int count = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a[static_cast<std::size_t>(i)] > a[static_cast<std::size_t>(j)]) ++count;
    return count;
}

/// Rothe diagram: cells (i,j) with w(i) > j and w^{-1}(j) > i.
inline CellSet rothe_diagram(const Permutation& w) {
    const int n = w.size();
    std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);  // pos[v] = w^{-1}(v)
    for (int i = 1; i <= n; ++i) pos[static_cast<std::size_t>(w(i))] = i;
    std::vector<Cell> cells;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j < w(i); ++j)
            if (pos[static_cast<std::size_t>(j)] > i) cells.push_back({i, j});
    return CellSet(std::move(cells));
}

/// Rank function r_w(i,j) = #{k <= i : w(k) <= j}.
inline int rank(const Permutation& w, int i, int j) {
    const int n = w.size();
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::out_of_range("rank: (i,j) must lie in the n x n grid");
    int count = 0;
    for (int k = 1; k <= i; ++k)
        if (w(k) <= j) ++count;
    return count;
}

// An occurrence of the pattern 132: positions i < j < k with
// w(i) < w(k) < w(j).
struct PatternTriple {
    int i = 0;
    int j = 0;
    int k = 0;

    friend constexpr auto operator<=>(const PatternTriple&, const PatternTriple&) = default;
};

/// All 132-pattern occurrences, by exhaustive scan over triples.
inline std::vector<PatternTriple> pattern_occurrences_132(const Permutation& w) {
    const auto& a = w.word();
    const int n = w.size();
    std::vector<PatternTriple> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (a[static_cast<std::size_t>(i)] < a[static_cast<std::size_t>(k)] &&
                    a[static_cast<std::size_t>(k)] < a[static_cast<std::size_t>(j)])
                    out.push_back({i + 1, j + 1, k + 1});
    return out;
}

inline long long eta(const Permutation& w) {
    return static_cast<long long>(pattern_occurrences_132(w).size());
}

/// The 132-pattern count computed as the rank sum over the Rothe diagram.
/// Independent of the triple scan in eta(); the two serve as mutual oracles.
inline long long eta_via_rank(const Permutation& w) {
    long long total = 0;
    for (Cell c : rothe_diagram(w)) total += rank(w, c.row, c.col);
    return total;
}

/// Lehmer code: m_i(w) = #{j > i : w(j) < w(i)}.
inline std::vector<int> m_vector(const Permutation& w) {
    const auto& a = w.word();
    const int n = w.size();
    std::vector<int> m(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a[static_cast<std::size_t>(j)] < a[static_cast<std::size_t>(i)])
                ++m[static_cast<std::size_t>(i)];
    return m;
}

/// Right action of the simple transposition s_i: exchanges the word entries
/// at positions i and i+1.
inline Permutation swap_adjacent(const Permutation& w, int i) {
    if (i < 1 || i >= w.size())
        throw std::out_of_range("swap_adjacent: position must satisfy 1 <= i < n");
    std::vector<int> word = w.word();
    std::swap(word[static_cast<std::size_t>(i) - 1], word[static_cast<std::size_t>(i)]);
    return Permutation(std::move(word));
}

/// Positions i with w(i) < w(i+1).
inline std::vector<int> ascents(const Permutation& w) {
    std::vector<int> out;
    for (int i = 1; i < w.size(); ++i)
        if (w(i) < w(i + 1)) out.push_back(i);
    return out;
}

/// Visits every element of S_n in lexicographic word order.
template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
    if (n < 1) throw std::invalid_argument("for_each_permutation: n must be >= 1");
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    do {
        fn(Permutation(word));
    } while (std::next_permutation(word.begin(), word.end()));
}

inline std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const Permutation& w) { out.push_back(w); });
    return out;
}

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

struct WordHash {
    std::size_t operator()(const std::vector<int>& word) const {
        std::size_t h = word.size();
        for (int v : word) h = hash_combine(h, static_cast<std::size_t>(v));
        return h;
    }
};

}  // namespace schubert
