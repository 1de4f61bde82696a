#include <doctest.h>

#include <random>

#include "crossint/constructions.hpp"
#include "crossint/errors.hpp"
#include "crossint/structure.hpp"
#include "support.hpp"

using namespace crossint;

TEST_CASE("intersection predicates") {
    CHECK(is_t_intersecting(test::fam(5, 3, {"123", "124"}), 2));
    CHECK_FALSE(is_cross_t_intersecting(test::fam(5, 3, {"123"}), test::fam(5, 3, {"145"}), 2));
    const Family a = build_A(12, 4, 2);
    CHECK(is_cross_t_intersecting(a, a, 2));
    CHECK_FALSE(is_nontrivial(build_star(8, 3, SubsetWord::of({1, 2})), 2));
    CHECK(is_nontrivial(test::uniform(4, 3, oracle::ksets(4, 3)), 2));
    CHECK_FALSE(is_nontrivial(test::fam(5, 3, {"123"}), 2));
    CHECK_THROWS_AS(is_nontrivial(Family(5, 3), 2), precondition_error);
    CHECK_THROWS_AS(is_cross_t_intersecting(test::fam(5, 3, {"123"}), test::fam(6, 3, {"123"}), 1),
                    precondition_error);
}

TEST_CASE("predicates agree with the oracle on random families") {
    std::mt19937_64 rng(3);
    for (int round = 0; round < 200; ++round) {
        const int t = 1 + static_cast<int>(rng() % 3);
        const Family f = test::random_uniform(rng, 8, 4, 1 + rng() % 6);
        const Family g = test::random_uniform(rng, 8, 4, 1 + rng() % 6);
        CHECK(is_t_intersecting(f, t) == oracle::t_intersecting(test::masks(f), t));
        CHECK(is_cross_t_intersecting(f, g, t) == oracle::cross(test::masks(f), test::masks(g), t));
        CHECK(is_nontrivial(f, t) == oracle::nontrivial(test::masks(f), t));
    }
}

TEST_CASE("t-transversals") {
    CHECK(t_transversals(build_A(8, 3, 2), 2, 3) == test::uniform(8, 3, oracle::ksets(4, 3)));
    CHECK(t_transversals(Family(6, 3), 2, 3).size() == 20);
    CHECK(t_transversals(test::fam(5, 3, {"123"}), 2, 2) == test::fam(5, 2, {"12", "13", "23"}));
    std::mt19937_64 rng(4);
    for (int round = 0; round < 100; ++round) {
        const Family f = test::random_uniform(rng, 8, 3, 1 + rng() % 4);
        const int t = 1 + static_cast<int>(rng() % 2);
        const int size = t + static_cast<int>(rng() % 4);
        CHECK(test::masks(t_transversals(f, t, size)) == oracle::transversals(test::masks(f), t, 8, size));
    }
}

TEST_CASE("tau_t") {
    CHECK(tau_t(build_star(8, 3, SubsetWord::of({1, 2})), 2) == 2);
    CHECK(tau_t(build_A(8, 3, 2), 2) == 3);
    CHECK(tau_t(test::fam(5, 3, {"123", "145"}), 2) == 3);
    CHECK_THROWS_AS(tau_t(Family(5, 3), 2), precondition_error);
    std::mt19937_64 rng(6);
    for (int round = 0; round < 100; ++round) {
        const Family f = test::random_uniform(rng, 9, 4, 1 + rng() % 6);
        const int t = 1 + static_cast<int>(rng() % 3);
        const int expected = oracle::tau(test::masks(f), t, 9);
        if (expected <= 4) {
            CHECK(tau_t(f, t) == expected);
        } else {
            CHECK_THROWS_AS(tau_t(f, t), infeasible_error);
        }
        CHECK(tau_t(f, t, 9) == expected);
    }
}

TEST_CASE("bases") {
    const Basis a = compute_basis(build_A(8, 3, 2), 2, 3);
    CHECK(a.members == test::mixed(8, oracle::ksets(4, 3)));
    CHECK(a.s == 3);
    const Basis star = compute_basis(build_star(8, 3, SubsetWord::of({1, 2})), 2, 3);
    CHECK(star.members == test::mixed(8, {test::set("12")}));
    CHECK(star.s == 2);
    const Basis single = compute_basis(test::fam(5, 3, {"123"}), 2, 3);
    CHECK(single.members == test::mixed(5, {test::set("12"), test::set("13"), test::set("23")}));
}

TEST_CASE("bases agree with the minimal-transversal oracle") {
    std::mt19937_64 rng(8);
    for (int round = 0; round < 100; ++round) {
        const int n = 7 + static_cast<int>(rng() % 3);
        const int k = 3 + static_cast<int>(rng() % 2);
        const int t = 1 + static_cast<int>(rng() % 2);
        const Family f = test::random_uniform(rng, n, k, 1 + rng() % 5);
        const Basis b = compute_basis(f, t, k);
        const std::vector<oracle::Mask> expected = oracle::minimal_transversals(test::masks(f), t, n, k);
        CHECK(test::masks(b.members) == expected);
        CHECK(b.is_antichain());
        std::size_t total = 0;
        for (const auto& [size, count] : b.layers) {
            CHECK(b.layer_count(size) == count);
            total += count;
        }
        CHECK(total == b.members.size());
        if (!b.members.empty()) CHECK(b.s == tau_t(f, t, n));
    }
}

TEST_CASE("saturation") {
    const SaturatedPair p = saturate(test::fam(6, 3, {"123"}), test::fam(6, 3, {"123"}), 2);
    CHECK(p.F.size() == 10);
    CHECK(p.G == test::fam(6, 3, {"123"}));
    for (SubsetWord s : p.F) CHECK(intersection_size(s, SubsetWord::of({1, 2, 3})) >= 2);

    const Family a = build_A(8, 3, 2);
    const SaturatedPair q = saturate(a, a, 2);
    CHECK(q.F == a);
    CHECK(q.G == a);
    CHECK(reconstruct_from_basis(q.basis_F, 8, 3) == a);

    CHECK_THROWS_AS(saturate(test::fam(6, 3, {"123"}), test::fam(6, 3, {"456"}), 1), precondition_error);
    CHECK_THROWS_AS(saturate(Family(6, 3), test::fam(6, 3, {"456"}), 1), precondition_error);
}

TEST_CASE("saturated pairs are mutual fixpoints with consistent bases") {
    std::mt19937_64 rng(10);
    int made = 0;
    while (made < 60) {
        const Family g = test::random_uniform(rng, 8, 3, 2 + rng() % 3);
        const Family options = t_transversals(g, 2, 3);
        if (options.empty()) continue;
        const Family f = Family::uniform(8, 3, {options[rng() % options.size()]});
        const SaturatedPair p = saturate(f, g, 2);
        ++made;
        CHECK(test::masks(p.F) == oracle::transversals(test::masks(p.G), 2, 8, 3));
        CHECK(test::masks(p.G) == oracle::transversals(test::masks(p.F), 2, 8, 3));
        CHECK(reconstruct_from_basis(p.basis_F, 8, 3) == p.F);
        CHECK(reconstruct_from_basis(p.basis_G, 8, 3) == p.G);
        CHECK(is_cross_t_intersecting(p.basis_F.members, p.basis_G.members, 2));
        for (SubsetWord s : f) CHECK(p.F.contains(s));
        for (SubsetWord s : g) CHECK(p.G.contains(s));
    }
}

TEST_CASE("reconstruction and layer partition") {
    const Basis pair = Basis::from_members(test::mixed(5, {test::set("12")}), 2, 3);
    CHECK(reconstruct_from_basis(pair, 5, 3) == build_star(5, 3, SubsetWord::of({1, 2})));
    const Basis top = Basis::from_members(test::mixed(6, {test::set("123")}), 2, 3);
    const Basis whole = Basis::from_members(test::mixed(3, {test::set("123")}), 2, 3);
    CHECK(reconstruct_from_basis(whole, 3, 3).size() == 1);
    CHECK(reconstruct_from_basis(top, 6, 3) == test::fam(6, 3, {"123"}));

    const auto layers = partition_by_basis_rank(build_star(6, 3, SubsetWord::of({1, 2})),
                                                Basis::from_members(test::mixed(6, {test::set("12")}), 2, 3));
    REQUIRE(layers.size() == 1);
    CHECK(layers.at(2).size() == 4);

    const Family a = build_A(8, 3, 2);
    const SaturatedPair p = saturate(a, a, 2);
    const auto a_layers = partition_by_basis_rank(p.F, p.basis_F);
    REQUIRE(a_layers.size() == 1);
    CHECK(a_layers.at(3) == a);
}

TEST_CASE("exact-pair classifier") {
    const ClauseSet sunflower = classify_exact_pair(test::fam(5, 3, {"123", "124"}), test::fam(5, 3, {"125"}), 2, 4);
    CHECK(sunflower.case_ii);
    const ClauseSet mixed = classify_exact_pair(test::fam(5, 3, {"123", "145"}), test::fam(5, 3, {"124", "135"}), 2, 3);
    CHECK(mixed.case_iii);
    CHECK(mixed.case_i);
    CHECK(classify_exact_pair(test::fam(5, 3, {"123"}), test::fam(5, 3, {"124"}), 2, 3).case_ii);
    CHECK_THROWS_AS(classify_exact_pair(test::fam(5, 3, {"123"}), test::fam(5, 3, {"123"}), 2, 3), precondition_error);
    CHECK_THROWS_AS(classify_exact_pair(test::fam(5, 3, {"123"}), test::fam(5, 3, {"124"}), 2, 2), precondition_error);
}

TEST_CASE("exact-pair facts") {
    const ExactFactsReport ok = check_exact_facts(test::fam(5, 3, {"123", "145"}), test::fam(5, 3, {"124"}), 2);
    CHECK(ok.fact1);
    CHECK(ok.fact2);
    CHECK(check_exact_facts(test::fam(5, 3, {"123"}), test::fam(5, 3, {"124", "135"}), 2).ok());
    CHECK_THROWS_AS(check_exact_facts(test::fam(6, 3, {"123"}), test::fam(6, 3, {"456"}), 2), precondition_error);
}
