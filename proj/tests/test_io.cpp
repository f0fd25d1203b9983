#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "schubert/io.hpp"

using namespace schubert;

TEST_CASE("permutation parsing") {
    CHECK(parse_permutation("4721635") == Permutation({4, 7, 2, 1, 6, 3, 5}));
    CHECK(parse_permutation("4,7,2,1,6,3,5") == Permutation({4, 7, 2, 1, 6, 3, 5}));
    CHECK(parse_permutation("1") == Permutation({1}));
    CHECK(parse_permutation("10,2,3,4,5,6,7,8,9,1") ==
          Permutation({10, 2, 3, 4, 5, 6, 7, 8, 9, 1}));
    CHECK(parse_permutation(" 2 , 1 ") == Permutation({2, 1}));

    CHECK_THROWS_AS(parse_permutation(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("120"), std::invalid_argument);   // '0' not a digit entry
    CHECK_THROWS_AS(parse_permutation("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("1,2,"), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("1,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("132 "), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("11"), std::invalid_argument);    // duplicate in S_2
}

TEST_CASE("json round trips") {
    const Permutation w({1, 4, 3, 2});

    SECTION("permutation") { CHECK(permutation_from_json(to_json(w)) == w); }

    SECTION("cells") {
        const CellSet cells = rothe_diagram(w);
        CHECK(cell_set_from_json(to_json(cells)) == cells);
        CHECK(cell_from_json(to_json(Cell{2, 5})) == Cell{2, 5});
        CHECK_THROWS_AS(cell_from_json(nlohmann::json::array({1})), std::invalid_argument);
    }

    SECTION("monomials and polynomials") {
        const Monomial m({2, 0, 1});
        CHECK(monomial_from_json(to_json(m)) == m);
        Polynomial f = schubert_divdiff(w);
        f.add_term(Monomial({9}), -12);
        CHECK(polynomial_from_json(to_json(f)) == f);
        CHECK(polynomial_from_json(to_json(Polynomial())) == Polynomial());
    }

    SECTION("pipe dreams") {
        for (const PipeDream& p : enumerate_rp(w)) CHECK(pipe_dream_from_json(to_json(p)) == p);
        const PipeDream empty(CellSet{}, 1);
        CHECK(pipe_dream_from_json(to_json(empty)) == empty);
    }

    SECTION("ladder moves") {
        const LadderMove mv{1, 2, 3};
        CHECK(ladder_move_from_json(to_json(mv)) == mv);
    }

    SECTION("labeled pipe dreams") {
        const LabeledPipeDream labeled = initial_labeling(w);
        CHECK(labeled_pipe_dream_from_json(to_json(labeled)) == labeled);
    }

    SECTION("ladder graphs") {
        const LadderGraph graph = ladder_graph(w);
        CHECK(ladder_graph_from_json(to_json(graph)) == graph);
    }

    SECTION("path reports") {
        const PathReport report = find_simple_path(w);
        CHECK(path_report_from_json(to_json(report)) == report);
        const PathReport trivial = find_simple_path(Permutation::identity(2));
        CHECK(path_report_from_json(to_json(trivial)) == trivial);
    }

    SECTION("sweep reports") {
        const BoundReport bound = verify_bound(3);
        CHECK(bound_report_from_json(to_json(bound)) == bound);
        const StanleyReport stanley = verify_stanley(3);
        CHECK(stanley_report_from_json(to_json(stanley)) == stanley);
        const OraclesReport oracles = verify_oracles(3);
        CHECK(oracles_report_from_json(to_json(oracles)) == oracles);
    }
}

TEST_CASE("polynomial terms serialize in canonical order") {
    const nlohmann::json terms = to_json(schubert_divdiff(Permutation({1, 4, 3, 2})));
    REQUIRE(terms.size() == 5);
    CHECK(terms[0]["exponents"] == nlohmann::json({2, 1}));
    CHECK(terms[1]["exponents"] == nlohmann::json({2, 0, 1}));
    CHECK(terms[2]["exponents"] == nlohmann::json({1, 2}));
    CHECK(terms[3]["exponents"] == nlohmann::json({1, 1, 1}));
    CHECK(terms[4]["exponents"] == nlohmann::json({0, 2, 1}));
    for (const auto& term : terms) CHECK(term["coefficient"] == 1);
}

TEST_CASE("dot export") {
    const std::string dot = to_dot(ladder_graph(Permutation({1, 4, 3, 2})));
    CHECK(dot.find("digraph ladder_moves {") == 0);
    CHECK(dot.find("n0 [label=") != std::string::npos);
    CHECK(dot.find("n4 [label=") != std::string::npos);
    CHECK(dot.find("style=dashed") != std::string::npos);  // the one non-simple move
    CHECK(dot.find("style=solid") != std::string::npos);
    CHECK(dot.find("(1,1,1)") != std::string::npos);
    CHECK(dot.find("x2^2 x3") != std::string::npos);       // bottom weight in a node label
    CHECK(dot.back() == '\n');

    // identical inputs give identical bytes
    CHECK(dot == to_dot(ladder_graph(Permutation({1, 4, 3, 2}))));

    const std::string trivial = to_dot(ladder_graph(Permutation::identity(1)));
    CHECK(trivial.find("n0") != std::string::npos);
    CHECK(trivial.find("->") == std::string::npos);
}

TEST_CASE("text reports") {
    const std::string bound = to_text(verify_bound(3));
    CHECK(bound.find("bound check on S_3: 6 permutations, 0 violations") != std::string::npos);
    CHECK(bound.find("pass") != std::string::npos);
    CHECK(bound.find("slack 0: 6") != std::string::npos);  // the bound is tight on all of S_3

    const std::string stanley = to_text(verify_stanley(3));
    CHECK(stanley.find("stanley check on S_3: 6 permutations, 0 counterexamples") !=
          std::string::npos);

    const std::string oracles = to_text(verify_oracles(3));
    CHECK(oracles.find("oracle check on S_3: 6 permutations, 0 polynomial mismatches") !=
          std::string::npos);
}
