#include <doctest.h>

#include "crossint/constructions.hpp"
#include "crossint/errors.hpp"
#include "crossint/search.hpp"
#include "crossint/structure.hpp"
#include "support.hpp"

using namespace crossint;

TEST_CASE("single-family search agrees with plain recursion") {
    for (auto [n, k, t] : {std::tuple{5, 2, 1}, std::tuple{6, 3, 1}, std::tuple{6, 3, 2}, std::tuple{7, 3, 2},
                           std::tuple{6, 4, 2}, std::tuple{6, 4, 3}, std::tuple{7, 2, 1}}) {
        for (bool nontrivial : {false, true}) {
            CAPTURE(n);
            CAPTURE(k);
            CAPTURE(t);
            CAPTURE(nontrivial);
            const SearchResult r = max_t_intersecting(n, k, t, nontrivial);
            const std::size_t expected = oracle::max_family(n, k, t, nontrivial);
            CHECK(r.exhaustive);
            if (expected == 0) {
                CHECK(r.optimum == -1);
                CHECK(r.witnesses.empty());
            } else {
                CHECK(r.optimum == expected);
                CHECK(witnesses_valid(SearchProblem{GroundParams{n, k, t}, SearchMode::single_t_intersecting,
                                                    nontrivial},
                                      r));
            }
        }
    }
}

TEST_CASE("reference optima") {
    CHECK(max_nontrivial_t_intersecting(6, 3, 2).optimum == 4);
    CHECK(max_nontrivial_t_intersecting(8, 3, 2).optimum == 4);
    CHECK(max_t_intersecting(6, 3, 2, false).optimum == binomial(4, 1));
    CHECK(max_t_intersecting(8, 3, 1, false).optimum == binomial(7, 2));
    const SearchResult r = max_nontrivial_t_intersecting(8, 4, 3);
    CHECK(r.optimum == std::max(size_A(8, 4, 3), size_H(8, 4, 3)));
}

TEST_CASE("witness is the lex-least optimum containing [k]") {
    const SearchResult r = max_nontrivial_t_intersecting(7, 3, 2);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0] == test::fam(7, 3, {"123", "124", "134", "234"}));
}

TEST_CASE("pair search agrees with the product oracle") {
    for (auto [n, k, t] : {std::tuple{5, 2, 1}, std::tuple{4, 2, 1}, std::tuple{5, 3, 2}, std::tuple{6, 2, 1}}) {
        for (bool nontrivial : {false, true}) {
            CAPTURE(n);
            CAPTURE(k);
            CAPTURE(t);
            CAPTURE(nontrivial);
            const SearchResult r = max_product_cross(n, k, t, nontrivial);
            const unsigned long long expected = oracle::max_cross_product(n, k, t, nontrivial);
            CHECK(r.exhaustive);
            if (expected == 0) {
                CHECK(r.optimum == -1);
            } else {
                CHECK(r.optimum == expected);
                CHECK(witnesses_valid(SearchProblem{GroundParams{n, k, t}, SearchMode::pair_cross_t, nontrivial},
                                      r));
            }
        }
    }
}

TEST_CASE("non-trivial pair optimum at (6,3,2)") {
    const SearchResult r = max_product_nontrivial_cross(6, 3, 2);
    CHECK(r.optimum == oracle::max_cross_product(6, 3, 2, true));
    CHECK(r.optimum >= size_A(6, 3, 2) * size_A(6, 3, 2));
    CHECK(r.optimum >= size_H(6, 3, 2) * size_H(6, 3, 2));
}

TEST_CASE("product search for cross-intersecting pairs") {
    CHECK(max_product_cross_1(6, 2).optimum == 25);
    CHECK(max_product_cross_1(8, 3).optimum == 441);
    CHECK(max_product_cross_1(6, 3).optimum == 100);
    CHECK(max_product_cross_1(4, 2).optimum == 9);
    for (auto [n, k] : {std::pair{5, 2}, std::pair{6, 2}, std::pair{4, 2}}) {
        const SearchResult r = max_product_cross_1(n, k);
        CHECK(r.optimum == oracle::max_cross_product(n, k, 1, false));
        CHECK(witnesses_valid(SearchProblem{GroundParams{n, k, 1}, SearchMode::pair_cross_1_pyber, false}, r));
    }
    CHECK_THROWS_AS(max_product_cross_1(5, 3), precondition_error);
}

TEST_CASE("budgets stop the search and clear the exhaustive flag") {
    const SearchResult single = max_t_intersecting(9, 4, 2, true, Budget{5, std::nullopt});
    CHECK_FALSE(single.exhaustive);
    CHECK(single.nodes_explored <= 5);
    const SearchResult pair = max_product_cross(7, 3, 2, true, Budget{10, std::nullopt});
    CHECK_FALSE(pair.exhaustive);
}

TEST_CASE("problem validation") {
    SearchProblem p{GroundParams{6, 2, 2}, SearchMode::pair_cross_1_pyber, false};
    CHECK_THROWS_AS(p.validate(), precondition_error);
    p.params.t = 1;
    CHECK_NOTHROW(p.validate());
    p.nontrivial = true;
    CHECK_THROWS_AS(p.validate(), precondition_error);
    p = SearchProblem{GroundParams{5, 3, 1}, SearchMode::pair_cross_1_pyber, false};
    CHECK_THROWS_AS(p.validate(), precondition_error);
    p = SearchProblem{GroundParams{6, 3, 2}, SearchMode::single_t_intersecting, true, false, Budget{std::nullopt, -1.0}};
    CHECK_THROWS_AS(solve(p), precondition_error);
    CHECK(to_string(SearchMode::pair_cross_t) == "pair");
}

TEST_CASE("HMF table") {
    const std::vector<HmfRow> rows = hmf_table({{6, 3, 2}, {7, 3, 2}, {8, 3, 2}, {9, 3, 2}});
    REQUIRE(rows.size() == 4);
    for (const HmfRow& row : rows) {
        CHECK(row.equal());
        CHECK(row.exhaustive);
        CHECK(row.optimum == 4);
    }
    CHECK_THROWS_AS(hmf_table({{5, 3, 2}}), precondition_error);
}
