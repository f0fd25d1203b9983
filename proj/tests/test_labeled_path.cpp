#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <vector>

#include "schubert/labeled_path.hpp"

using namespace schubert;

namespace {

// Labels of one antidiagonal read top to bottom.
std::vector<Cell> antidiagonal_labels(const LabeledPipeDream& labeled, int diag) {
    std::vector<Cell> out;  // label map iterates crosses in row-major order
    for (const auto& [cross, tag] : labeled.labels())
        if (cross.row + cross.col == diag) out.push_back(tag);
    return out;
}

}  // namespace

TEST_CASE("initial labeling pairs diagram cells with bottom crosses") {
    CHECK(initial_labeling(Permutation::identity(3)).labels().empty());

    const LabeledPipeDream bottom = initial_labeling(Permutation({1, 4, 3, 2}));
    CHECK(bottom.dream() == bottom_pipe_dream(Permutation({1, 4, 3, 2})));
    CHECK(bottom.labels() ==
          LabeledPipeDream::LabelMap{{{2, 1}, {2, 2}}, {{2, 2}, {2, 3}}, {{3, 1}, {3, 2}}});

    const LabeledPipeDream big = initial_labeling(Permutation({4, 7, 2, 1, 6, 3, 5}));
    CHECK(big.label_at({5, 1}) == Cell{5, 3});
    CHECK(big.label_at({5, 2}) == Cell{5, 5});
    CHECK_THROWS_AS(big.label_at({6, 1}), std::out_of_range);
}

TEST_CASE("target labeling pairs diagram cells with top crosses") {
    CHECK(target_labeling(Permutation::identity(3)).labels().empty());

    const LabeledPipeDream top = target_labeling(Permutation({1, 4, 3, 2}));
    CHECK(top.dream() == top_pipe_dream(Permutation({1, 4, 3, 2})));
    CHECK(top.labels() ==
          LabeledPipeDream::LabelMap{{{1, 2}, {2, 2}}, {{1, 3}, {2, 3}}, {{2, 2}, {3, 2}}});

    // the longest element has coinciding bottom and top labelings
    for (int n = 2; n <= 5; ++n)
        CHECK(initial_labeling(Permutation::longest(n)) ==
              target_labeling(Permutation::longest(n)));
}

TEST_CASE("labelings must be injective and total") {
    const PipeDream p(CellSet{{1, 1}, {2, 1}}, 3);
    CHECK_THROWS_AS(LabeledPipeDream(p, {{{1, 1}, {1, 2}}}), std::logic_error);  // not total
    CHECK_THROWS_AS(LabeledPipeDream(p, {{{1, 1}, {1, 2}}, {{2, 1}, {1, 2}}}),
                    std::logic_error);  // not injective
    CHECK_THROWS_AS(LabeledPipeDream(p, {{{1, 1}, {1, 2}}, {{1, 2}, {2, 2}}}),
                    std::logic_error);  // label on a missing cross
    CHECK_NOTHROW(LabeledPipeDream(p, {{{1, 1}, {1, 2}}, {{2, 1}, {2, 2}}}));
}

TEST_CASE("labels transport along simple moves") {
    const LabeledPipeDream bottom = initial_labeling(Permutation({1, 4, 3, 2}));

    const LabeledPipeDream moved = inherit_label(bottom, {1, 2, 0});
    CHECK(moved.label_at({1, 3}) == Cell{2, 3});       // travelled with the cross
    CHECK(moved.label_at({2, 1}) == Cell{2, 2});       // untouched
    CHECK(moved.label_at({3, 1}) == Cell{3, 2});       // untouched
    CHECK(moved.labels().size() == 3);

    // single-cross dream: the label just follows the cross
    const LabeledPipeDream single = initial_labeling(Permutation({1, 3, 2}));
    CHECK(single.labels() == LabeledPipeDream::LabelMap{{{2, 1}, {2, 2}}});
    const LabeledPipeDream lifted = inherit_label(single, {1, 1, 0});
    CHECK(lifted.labels() == LabeledPipeDream::LabelMap{{{1, 2}, {2, 2}}});

    CHECK_THROWS_AS(inherit_label(bottom, {1, 1, 1}), std::invalid_argument);  // not simple
    CHECK_THROWS_AS(inherit_label(bottom, {2, 3, 0}), std::invalid_argument);  // not valid
}

TEST_CASE("simple path from bottom to top") {
    const PathReport empty = find_simple_path(Permutation::identity(4));
    CHECK(empty.total_moves == 0);
    CHECK(empty.steps.empty());
    CHECK(empty.final_state == target_labeling(Permutation::identity(4)));

    const PathReport path = find_simple_path(Permutation({1, 4, 3, 2}));
    CHECK(path.total_moves == 3);
    REQUIRE(path.steps.size() == 3);
    CHECK(path.steps[0].move == LadderMove{1, 2, 0});
    CHECK(path.steps[1].move == LadderMove{1, 1, 0});
    CHECK(path.steps[2].move == LadderMove{2, 1, 0});
    CHECK(path.final_state == target_labeling(Permutation({1, 4, 3, 2})));
    CHECK(path.move_counts ==
          std::map<Cell, long long>{{{2, 2}, 1}, {{2, 3}, 1}, {{3, 2}, 1}});

    CHECK(find_simple_path(Permutation({4, 7, 2, 1, 6, 3, 5})).total_moves == 7);

    for (const Permutation& w : all_permutations(4))
        CHECK(find_simple_path(w).total_moves == eta(w));
}

TEST_CASE("per-label move counts equal the rank function") {
    CHECK(verify_claim_plusrank(Permutation::identity(4)));
    CHECK(verify_claim_plusrank(Permutation({1, 4, 3, 2})));
    CHECK(verify_claim_plusrank(Permutation({4, 7, 2, 1, 6, 3, 5})));
    for (const Permutation& w : all_permutations(5)) CHECK(verify_claim_plusrank(w));
}

TEST_CASE("path invariants hold for every sampled path") {
    for (const Permutation& w : all_permutations(4)) {
        const LabeledPipeDream start = initial_labeling(w);
        const std::vector<int> base_diagonal = antidiagonal_vector(start.dream());
        PathReport first = find_simple_path(w, 1);
        for (unsigned seed : {1u, 2u, 3u}) {
            const PathReport report = find_simple_path(w, seed);

            // every sampled path has length eta(w)
            CHECK(report.total_moves == eta(w));

            // antidiagonal vector is constant along the path
            std::set<PipeDream> visited;
            for (const PathStep& step : report.steps) {
                CHECK(antidiagonal_vector(step.before.dream()) == base_diagonal);
                visited.insert(step.before.dream());

                // within each antidiagonal the label order never changes
                for (int diag = 2; diag <= w.size(); ++diag)
                    CHECK(antidiagonal_labels(step.before, diag) ==
                          antidiagonal_labels(start, diag));
            }
            visited.insert(report.final_state.dream());

            // all pipe dreams along the path are pairwise distinct
            CHECK(visited.size() == report.steps.size() + 1);

            // the transported labeling at the top never depends on the path
            CHECK(report.final_state == first.final_state);
            CHECK(report.final_state == target_labeling(w));
        }
    }
}

TEST_CASE("bound sweep") {
    const BoundReport tiny = verify_bound(1);
    CHECK(tiny.count == 1);
    CHECK(tiny.passed());
    CHECK(tiny.slack_histogram == std::map<long long, long long>{{0, 1}});

    const BoundReport report = verify_bound(4);
    CHECK(report.n == 4);
    CHECK(report.count == 24);
    CHECK(report.passed());
    CHECK(report.violations.empty());
    CHECK(report.path_mismatches.empty());
    REQUIRE(report.records.size() == 24);

    const auto find_record = [&](std::vector<int> word) {
        for (const SweepRecord& r : report.records)
            if (r.word == word) return r;
        FAIL("record not found");
        return report.records.front();
    };
    const SweepRecord r1432 = find_record({1, 4, 3, 2});
    CHECK(r1432.eta == 3);
    CHECK(r1432.nu == 5);
    CHECK(r1432.slack == 1);
    CHECK(r1432.path_length == 3);
    const SweepRecord r2143 = find_record({2, 1, 4, 3});
    CHECK(r2143.eta == 2);
    CHECK(r2143.nu == 3);
    CHECK(r2143.slack == 0);  // the bound is tight here

    CHECK_THROWS_AS(verify_bound(0), std::invalid_argument);
}

TEST_CASE("stanley sweep") {
    const StanleyReport s3 = verify_stanley(3);
    CHECK(s3.count == 6);
    CHECK(s3.passed());
    int seen_132 = 0;
    for (const SweepRecord& r : s3.records) {
        if (r.word == std::vector<int>{1, 3, 2}) {
            CHECK(r.eta == 1);
            CHECK(r.nu == 2);
            ++seen_132;
        } else {
            CHECK(r.eta == 0);
            CHECK(r.nu == 1);
        }
    }
    CHECK(seen_132 == 1);

    CHECK(verify_stanley(1).passed());
    CHECK(verify_stanley(5).passed());
    CHECK_THROWS_AS(verify_stanley(0), std::invalid_argument);
}
