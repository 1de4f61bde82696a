#include <doctest.h>

#include <random>

#include "crossint/bigint.hpp"
#include "crossint/errors.hpp"
#include "crossint/family.hpp"
#include "support.hpp"

using namespace crossint;

TEST_CASE("binomial values and conventions") {
    CHECK(binomial(8, 3) == 56);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(-2, 1) == 0);
    CHECK(binomial(12, 4) == oracle::pascal(12, 4));
    for (int m = 0; m <= 40; ++m) {
        for (int r = -1; r <= m + 1; ++r) {
            CHECK(binomial(m, r) == oracle::pascal(m, r));
            if (m <= 64) CHECK(binomial_u64(m, r) == oracle::pascal(m, r));
        }
    }
    CHECK(binomial(100, 50) == BigInt("100891344545564193334812497256"));
}

TEST_CASE("rationals stay in lowest terms") {
    const BigRational q = make_rational(6, -4);
    CHECK(numerator(q) == -3);
    CHECK(denominator(q) == 2);
    CHECK(parse_rational("8/6") == make_rational(4, 3));
    CHECK(parse_rational("-5") == -5);
    CHECK(to_string(make_rational(4, 9)) == "4/9");
    CHECK(to_string(make_rational(8, 4)) == "2");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("subset words") {
    const SubsetWord s = SubsetWord::of({1, 2, 4});
    CHECK(s.size() == 3);
    CHECK(s.bits() == 0b1011);
    CHECK(s.contains(4));
    CHECK_FALSE(s.contains(3));
    CHECK(s.min_element() == 1);
    CHECK(s.max_element() == 4);
    CHECK(to_string(s) == "{1,2,4}");
    CHECK(SubsetWord::range(3, 2).empty());
    CHECK(s.without(2).with(5) == SubsetWord::of({1, 4, 5}));
    CHECK(s.fits(4));
    CHECK_FALSE(s.fits(3));
}

TEST_CASE("lex order agrees with tuple order on every pair of subsets of [6]") {
    for (oracle::Mask a = 0; a < 64; ++a) {
        for (oracle::Mask b = 0; b < 64; ++b) {
            if (oracle::pop(a) != oracle::pop(b)) continue;
            CHECK(lex_precedes(SubsetWord::from_bits(a), SubsetWord::from_bits(b)) == oracle::lex_less(a, b));
        }
    }
    // (1,7) precedes (2,3)
    CHECK(lex_precedes(SubsetWord::of({1, 7}), SubsetWord::of({2, 3})));
}

TEST_CASE("k-set enumeration") {
    const std::vector<SubsetWord> small = all_ksets(3, 2);
    REQUIRE(small.size() == 3);
    CHECK(small[0] == SubsetWord::of({1, 2}));
    CHECK(small[1] == SubsetWord::of({1, 3}));
    CHECK(small[2] == SubsetWord::of({2, 3}));
    CHECK(*enumerate_ksets(5, 3).begin() == SubsetWord::of({1, 2, 3}));
    for (int n = 0; n <= 9; ++n) {
        for (int k = 0; k <= n; ++k) {
            std::vector<oracle::Mask> got;
            for (SubsetWord s : enumerate_ksets(n, k)) got.push_back(s.bits());
            CHECK(got == oracle::ksets(n, k));
        }
    }
    CHECK(subsets_of_size(SubsetWord::of({2, 4, 6}), 2).size() == 3);
}

TEST_CASE("lex families") {
    CHECK(lex_family(5, 2, 4) == test::fam(5, 2, {"12", "13", "14", "15"}));
    CHECK(lex_family(7, 3, 0).empty());
    CHECK(lex_family(4, 2, 6).size() == 6);
    CHECK_THROWS_AS(lex_family(4, 2, 7), precondition_error);
    for (std::uint64_t m = 0; m <= 35; ++m) CHECK(test::masks(lex_family(7, 3, m)) == oracle::lex_prefix(7, 3, m));
}

TEST_CASE("common intersection") {
    CHECK(common_intersection(test::fam(5, 3, {"123", "124"})) == SubsetWord::of({1, 2}));
    CHECK(common_intersection(test::uniform(4, 3, oracle::ksets(4, 3))).empty());
    CHECK(common_intersection(test::fam(5, 3, {"123"})) == SubsetWord::of({1, 2, 3}));
    CHECK_THROWS_AS(common_intersection(Family(5, 3)), precondition_error);
}

TEST_CASE("families stay sorted and duplicate-free") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 50; ++round) {
        Family f = test::random_uniform(rng, 8, 3, 12);
        const std::vector<oracle::Mask> v = test::masks(f);
        CHECK(std::is_sorted(v.begin(), v.end(), oracle::lex_less));
        CHECK(std::adjacent_find(v.begin(), v.end()) == v.end());
        const SubsetWord extra = SubsetWord::of({6, 7, 8});
        const bool had = f.contains(extra);
        CHECK(f.insert(extra) == !had);
        CHECK_FALSE(f.insert(extra));
        const std::vector<oracle::Mask> w = test::masks(f);
        CHECK(std::is_sorted(w.begin(), w.end(), oracle::lex_less));
    }
    Family f(5, 3);
    CHECK_THROWS_AS(f.insert(SubsetWord::of({1, 2})), precondition_error);
    CHECK_THROWS_AS(f.insert(SubsetWord::of({1, 2, 6})), precondition_error);
}

TEST_CASE("text format round trip") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 30; ++round) {
        const Family f = test::random_uniform(rng, 9, 4, 1 + rng() % 10);
        CHECK(parse_family(to_text(f)) == f);
    }
    const Family mixed = Family::mixed(6, {SubsetWord(), SubsetWord::of({2}), SubsetWord::of({1, 5, 6})});
    const std::string text = to_text(mixed);
    // The empty set comes last: every non-empty set precedes it.
    CHECK(text == "n=6 k=mixed\n1 5 6\n2\n-\n");
    CHECK(parse_family(text) == mixed);
    const Family empty(7, 3);
    CHECK(to_text(empty) == "n=7 k=3\n");
    CHECK(parse_family("# comment\n\nn=7 k=3\n") == empty);
}

TEST_CASE("text format errors carry line numbers") {
    CHECK_THROWS_AS(parse_family("1 2 3\n"), parse_error);
    try {
        parse_family("n=4 k=2\n1 2\n1 5\n");
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_family("n=4 k=2\n1 1\n"), parse_error);
    CHECK_THROWS_AS(parse_family("n=4 k=2\n1 2 3\n"), parse_error);
}

TEST_CASE("ground parameters") {
    CHECK_NOTHROW(GroundParams::make(8, 3, 2));
    CHECK_THROWS_AS(GroundParams::make(3, 3, 2), precondition_error);
    CHECK_THROWS_AS(GroundParams::make(8, 3, 0), precondition_error);
    CHECK_THROWS_AS(GroundParams::make(65, 3, 2), precondition_error);
}
