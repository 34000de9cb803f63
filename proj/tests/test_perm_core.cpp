#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "popav/errors.hpp"
#include "popav/permutation.hpp"

#include "oracles.hpp"

using namespace popav;
namespace tst = popav::testing;

TEST_CASE("construction validates one-line words") {
    CHECK_NOTHROW(Permutation({2, 4, 1, 3}));
    CHECK_NOTHROW(Permutation(std::vector<int>{}));
    CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({-2, 1}), std::invalid_argument);
}

TEST_CASE("parse and str round-trip in both text forms") {
    CHECK(Permutation::parse("2413").str() == "2413");
    CHECK(Permutation::parse("2,4,1,3") == Permutation::parse("2413"));
    CHECK(Permutation::parse("10,2,3,4,5,6,7,8,9,1").at(1) == 10);
    CHECK(Permutation::parse("").empty());
    const Permutation big = Permutation::identity(12);
    CHECK(Permutation::parse(big.str()) == big);
    CHECK(big.str().find(',') != std::string::npos);
    CHECK_THROWS_AS(Permutation::parse("1z3"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("122"), std::invalid_argument);
}

TEST_CASE("identity and comparison") {
    CHECK(Permutation::identity(4) == Permutation::parse("1234"));
    CHECK(Permutation::identity(0) == Permutation());
    CHECK(Permutation::parse("12") < Permutation::parse("21"));
}

TEST_CASE("reduce flattens distinct words") {
    CHECK(reduce({1, 5, 7, 6}) == Permutation::parse("1243"));
    CHECK(reduce({4, 2, 3}) == Permutation::parse("312"));
    CHECK(reduce({}) == Permutation());
    CHECK(reduce({-3, 10, 0}) == Permutation::parse("132"));
    CHECK_THROWS_AS(reduce({2, 2}), std::invalid_argument);
}

TEST_CASE("contains_pattern agrees with the subsequence oracle") {
    const std::vector<Permutation> patterns = {
        Permutation::parse("1"),    Permutation::parse("12"),   Permutation::parse("21"),
        Permutation::parse("132"),  Permutation::parse("231"),  Permutation::parse("312"),
        Permutation::parse("321"),  Permutation::parse("2413"), Permutation::parse("3142"),
        Permutation::parse("2431"), Permutation::parse("1234"), Permutation::parse("21534")};
    for (int n = 0; n <= 6; ++n) {
        for (const auto& word : tst::raw_perms(n)) {
            const Permutation p(word);
            for (const auto& pat : patterns)
                CHECK(contains_pattern(p, pat) == tst::oracle_contains_pattern(p, pat));
        }
    }
}

TEST_CASE("avoids_all is the conjunction of single-pattern avoidance") {
    const std::vector<Permutation> pats = {Permutation::parse("2413"),
                                           Permutation::parse("3142")};
    for (const auto& word : tst::raw_perms(5)) {
        const Permutation p(word);
        const bool expect =
            !tst::oracle_contains_pattern(p, pats[0]) && !tst::oracle_contains_pattern(p, pats[1]);
        CHECK(avoids_all(p, pats) == expect);
    }
}

TEST_CASE("is_interval checks contiguous value ranges") {
    const Permutation p = Permutation::parse("4215763");
    CHECK(is_interval(p, 1, 1));
    CHECK(!is_interval(p, 1, 2)); // values {4,2} skip 3
    CHECK(is_interval(p, 2, 3));  // values {2,1}
    CHECK(is_interval(p, 4, 6));  // values {5,7,6}
    CHECK(!is_interval(p, 4, 5));
    CHECK(is_interval(p, 1, 7));
}

TEST_CASE("is_simple matches the definitional window scan") {
    for (int n = 0; n <= 7; ++n) {
        for (const auto& word : tst::raw_perms(n)) {
            const Permutation p(word);
            bool has_proper = false;
            for (int i = 1; i <= n && !has_proper; ++i)
                for (int j = i + 1; j <= n && !has_proper; ++j)
                    if (j - i + 1 < n && is_interval(p, i, j)) has_proper = true;
            CHECK(is_simple(p) == !has_proper);
        }
    }
    CHECK(is_simple(Permutation::parse("2413")));
    CHECK(is_simple(Permutation::parse("3142")));
    CHECK(!is_simple(Permutation::parse("2431")));
}

TEST_CASE("direct and skew sums") {
    const Permutation a = Permutation::parse("21"), b = Permutation::parse("132");
    CHECK(direct_sum(a, b) == Permutation::parse("21354"));
    CHECK(skew_sum(a, b) == Permutation::parse("54132"));
    CHECK(direct_sum(Permutation(), b) == b);
    CHECK(skew_sum(a, Permutation()) == a);
}

TEST_CASE("inflate substitutes blocks, empty blocks vanish") {
    CHECK(inflate(Permutation::parse("21"),
                  {Permutation::parse("12"), Permutation::parse("1")}) ==
          Permutation::parse("231"));
    CHECK(inflate(Permutation::parse("3142"),
                  {Permutation::parse("1"), Permutation::parse("21"),
                   Permutation::parse("132"), Permutation::parse("1")}) ==
          Permutation::parse("4215763"));
    CHECK(inflate(Permutation::parse("132"),
                  {Permutation::parse("1"), Permutation(), Permutation::parse("1")}) ==
          Permutation::parse("12"));
    CHECK_THROWS_AS(inflate(Permutation::parse("12"), {Permutation::parse("1")}),
                    std::invalid_argument);
}

TEST_CASE("sum and skew decomposability by the prefix criterion") {
    for (const auto& word : tst::raw_perms(5)) {
        const Permutation p(word);
        bool sum_dec = false, skew_dec = false;
        for (int i = 1; i < 5; ++i) {
            int hi = 0, lo = 6;
            for (int t = 1; t <= i; ++t) {
                hi = std::max(hi, p.at(t));
                lo = std::min(lo, p.at(t));
            }
            if (hi == i) sum_dec = true;
            if (lo == 5 - i + 1) skew_dec = true;
        }
        CHECK(is_sum_decomposable(p) == sum_dec);
        CHECK(is_skew_decomposable(p) == skew_dec);
    }
}

TEST_CASE("decompose round-trips through inflate") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& word : tst::raw_perms(n)) {
            const Permutation p(word);
            const Decomposition d = decompose(p);
            CHECK(inflate(d.quotient, d.blocks) == p);
        }
    }
}

TEST_CASE("decompose is canonical") {
    for (int n = 2; n <= 6; ++n) {
        for (const auto& word : tst::raw_perms(n)) {
            const Permutation p(word);
            const Decomposition d = decompose(p);
            CHECK(d.quotient.size() == static_cast<int>(d.blocks.size()));
            for (const auto& blk : d.blocks) CHECK(!blk.empty());
            if (d.quotient == Permutation::parse("12")) {
                CHECK(!is_sum_decomposable(d.blocks[0]));
            } else if (d.quotient == Permutation::parse("21")) {
                CHECK(!is_skew_decomposable(d.blocks[0]));
            } else {
                CHECK(is_simple(d.quotient));
                CHECK(d.quotient.size() >= 4);
                for (const auto& blk : d.blocks) CHECK(blk.size() < n);
            }
        }
    }
    const Decomposition d = decompose(Permutation::parse("2413"));
    CHECK(d.quotient == Permutation::parse("2413"));
}

TEST_CASE("separability is avoidance of 2413 and 3142") {
    CHECK(!is_separable(Permutation::parse("2413")));
    CHECK(!is_separable(Permutation::parse("3142")));
    CHECK(is_separable(Permutation::parse("2143")));
    for (const auto& word : tst::raw_perms(5)) {
        const Permutation p(word);
        const bool expect = !tst::oracle_contains_pattern(p, Permutation::parse("2413")) &&
                            !tst::oracle_contains_pattern(p, Permutation::parse("3142"));
        CHECK(is_separable(p) == expect);
    }
}

TEST_CASE("inverse composes to the identity") {
    for (int n = 0; n <= 6; ++n) {
        for (const auto& word : tst::raw_perms(n)) {
            const Permutation p(word);
            const Permutation q = inverse(p);
            for (int i = 1; i <= n; ++i) CHECK(q.at(p.at(i)) == i);
        }
    }
}

TEST_CASE("all_permutations is the sorted full list") {
    CHECK(all_permutations(0) == std::vector<Permutation>{Permutation()});
    const auto s4 = all_permutations(4);
    CHECK(s4.size() == 24);
    CHECK(std::is_sorted(s4.begin(), s4.end()));
    CHECK(s4.front() == Permutation::parse("1234"));
    CHECK(s4.back() == Permutation::parse("4321"));
    CHECK_THROWS_AS(all_permutations(11), ResourceLimitError);
}

TEST_CASE("for_each_permutation visits n! words in lexicographic order") {
    int count = 0;
    std::vector<int> prev;
    for_each_permutation(5, [&](const std::vector<int>& v) {
        if (!prev.empty()) CHECK(std::lexicographical_compare(prev.begin(), prev.end(),
                                                              v.begin(), v.end()));
        prev = v;
        ++count;
    });
    CHECK(count == 120);
}
