#include <doctest.h>

#include <random>

#include "crossint/branching.hpp"
#include "crossint/errors.hpp"
#include "support.hpp"

using namespace crossint;

namespace {

Basis all_triples_of_four() { return Basis::from_members(test::mixed(4, oracle::ksets(4, 3)), 2, 3); }

// Sum over l in [from, k] of |B2^(l)| / (C(s1,t) * extra * k^(l - t - shift)),
// straight from the layer sizes.
BigRational layer_sum(const Basis& b1, const Basis& b2, int from, int t, int k, long long extra, int shift) {
    BigRational sum = 0;
    for (int l = from; l <= k; ++l) {
        long long count = 0;
        for (SubsetWord s : b2.members) count += s.size() == l;
        BigInt den = binomial(b1.s, t) * extra;
        for (int i = 0; i < l - t - shift; ++i) den *= k;
        sum += BigRational(count) / BigRational(den);
    }
    return sum;
}

std::vector<SaturatedPair> random_pairs(std::uint64_t seed, std::size_t count) {
    std::mt19937_64 rng(seed);
    std::vector<SaturatedPair> out;
    while (out.size() < count) {
        const Family g = test::random_uniform(rng, 8, 3, 2 + rng() % 3);
        const Family options = t_transversals(g, 2, 3);
        if (options.empty()) continue;
        SaturatedPair p = saturate(Family::uniform(8, 3, {options[rng() % options.size()]}), g, 2);
        if (p.basis_F.s >= 3 && !p.basis_G.members.empty()) out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

TEST_CASE("toy process on all triples of [4]") {
    const Basis b = all_triples_of_four();
    const BranchReport r = run_branching(b, b, 3, 2, 3);
    CHECK(r.weight_conserved);
    for (const BigRational& w : r.stage_weight_sums) CHECK(w == 1);
    CHECK(r.cover_ok);
    CHECK(r.weight_bound_ok);
    CHECK(r.lhs14 == make_rational(4, 9));
    CHECK(r.lhs15 == make_rational(4, 9));
    CHECK(lhs_inequality_14(b, b, 3, 2, 3) == make_rational(4, 9));
    CHECK(lhs_inequality_15(b, b, 2, 3) == make_rational(4, 9));
    CHECK(r.stages <= 4);
    BigRational mass = 0;
    for (const Sequence& s : r.survivors) {
        mass += s.weight;
        CHECK(static_cast<int>(s.elements.size()) == s.set.size());
    }
    CHECK(mass <= 1);
}

TEST_CASE("inequality left-hand sides match the layer-count formula") {
    for (const SaturatedPair& p : random_pairs(21, 40)) {
        const int t = 2;
        const int k = 3;
        CHECK(lhs_inequality_15(p.basis_F, p.basis_G, t, k) == layer_sum(p.basis_F, p.basis_G, p.basis_F.s, t, k, 1, 0));
        for (int r1 = t + 1; r1 <= k; ++r1) {
            CHECK(lhs_inequality_14(p.basis_F, p.basis_G, r1, t, k) ==
                  layer_sum(p.basis_F, p.basis_G, r1, t, k, r1, 1));
        }
    }
}

TEST_CASE("empty summation range and single-set bases") {
    const Basis b1 = Basis::from_members(test::mixed(6, {test::set("123")}), 2, 3);
    const Basis b2 = Basis::from_members(test::mixed(6, {test::set("12")}), 2, 3);
    CHECK(lhs_inequality_15(b1, b2, 2, 3) == 0);
    // (C(t+1,t) k)^-1 with t = 2, k = 5
    const Basis star = Basis::from_members(test::mixed(8, {test::set("123")}), 2, 5);
    CHECK(lhs_inequality_15(star, star, 2, 5) == make_rational(1, 15));
    CHECK_THROWS_AS(lhs_inequality_14(b1, b1, 2, 2, 3), precondition_error);
}

TEST_CASE("branching policy") {
    const Family candidates = test::fam(5, 3, {"124", "134"});
    Sequence seq;
    seq.set = SubsetWord::of({1});
    CHECK(branch_policy(seq, candidates, 2, 1, lex_policy()) == SubsetWord::of({1, 2, 4}));
    seq.set = SubsetWord::of({1, 2, 3, 4});
    CHECK_FALSE(branch_policy(seq, candidates, 2, 1, lex_policy()));
    CHECK_NOTHROW(parse_policy("random:17"));
    CHECK_THROWS_AS(parse_policy("random:"), precondition_error);
    CHECK_THROWS_AS(parse_policy("greedy"), precondition_error);
}

TEST_CASE("policy swap keeps the weight identity") {
    std::size_t differing = 0;
    std::uint64_t seed = 0;
    for (const SaturatedPair& p : random_pairs(33, 50)) {
        const auto r1 = min_r_for_cover(p.basis_F, 2);
        const BranchReport a = run_branching(p.basis_F, p.basis_G, r1, 2, 3, lex_policy());
        const BranchReport b = run_branching(p.basis_F, p.basis_G, r1, 2, 3, random_policy(++seed));
        CHECK(a.weight_conserved);
        CHECK(b.weight_conserved);
        CHECK(b.cover_ok);
        CHECK(b.weight_bound_ok);
        for (const BigRational& w : b.stage_weight_sums) CHECK(w == 1);
        differing += a.survivors_by_length != b.survivors_by_length || a.survivors.size() != b.survivors.size();
    }
    MESSAGE("survivor profiles that changed under the random policy: " << differing);
}

TEST_CASE("preconditions") {
    const Basis low = Basis::from_members(test::mixed(6, {test::set("12")}), 2, 3);
    CHECK_THROWS_AS(run_branching(low, low, std::nullopt, 2, 3), precondition_error);
    const Basis b = all_triples_of_four();
    CHECK_THROWS_AS(run_branching(b, b, 4, 2, 3), precondition_error);
    CHECK_THROWS_AS(run_branching(b, b, 2, 2, 3), precondition_error);
    // {1,2} is a 2-transversal of {123, 124}.
    const Basis two = Basis::from_members(test::mixed(6, {test::set("123"), test::set("124")}), 2, 3);
    try {
        run_branching(two, two, 3, 2, 3);
        FAIL("expected a precondition error");
    } catch (const precondition_error& e) {
        CHECK(std::string(e.what()).find("{1,2}") != std::string::npos);
    }
}

TEST_CASE("minimal covering r") {
    CHECK(min_r_for_cover(all_triples_of_four(), 2) == 3);
    const Basis mixed = Basis::from_members(test::mixed(7, {test::set("123"), test::set("1456")}), 2, 4);
    CHECK(min_r_for_cover(mixed, 2) == 4);
    const Basis trivial = Basis::from_members(test::mixed(7, {test::set("123"), test::set("124")}), 2, 3);
    CHECK_FALSE(min_r_for_cover(trivial, 2));
}
