#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "popav/counting.hpp"
#include "popav/errors.hpp"
#include "popav/numbers.hpp"

#include "oracles.hpp"

using namespace popav;
namespace tst = popav::testing;

TEST_CASE("number helpers") {
    CHECK(fibonacci(0) == 0);
    CHECK(fibonacci(1) == 1);
    CHECK(fibonacci(2) == 1);
    CHECK(fibonacci(10) == 55);
    CHECK(fibonacci(50) == BigInt("12586269025"));
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(int_pow(3, 0) == 1);
    CHECK(int_pow(2, 20) == 1048576);
    CHECK(int_pow(10, 30) == BigInt("1000000000000000000000000000000"));
    CHECK_THROWS_AS(fibonacci(-1), std::invalid_argument);
    CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
    CHECK_THROWS_AS(int_pow(2, -1), std::invalid_argument);
}

TEST_CASE("matrix parse accepts digit rows and spaced rows") {
    const RestrictionMatrix a = RestrictionMatrix::parse("101\n010\n101\n");
    const RestrictionMatrix b = RestrictionMatrix::parse("1 0 1\n0 1 0\n1 0 1");
    const RestrictionMatrix c = RestrictionMatrix::parse("# comment\n101\n\n010\n101");
    CHECK(a == b);
    CHECK(a == c);
    CHECK(a.entry(1, 1) == 1);
    CHECK(a.entry(2, 1) == 0);
    CHECK_THROWS_AS(RestrictionMatrix::parse("10\n010\n101"), std::invalid_argument);
    CHECK_THROWS_AS(RestrictionMatrix::parse("11\n01\n10"), std::invalid_argument);
    CHECK(RestrictionMatrix::parse(a.str()) == a);
}

TEST_CASE("builtin matrices") {
    const RestrictionMatrix q = RestrictionMatrix::qk(4, 6);
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j) CHECK(q.entry(i, j) == (i >= j - 4 + 2 ? 1 : 0));
    for (int b = 1; b <= 3; ++b)
        for (int n = 1; n <= 6; ++n)
            CHECK(RestrictionMatrix::juggling(b, n) ==
                  RestrictionMatrix::qk(b + 2, n).transposed());
}

TEST_CASE("transpose and permute") {
    std::mt19937 rng(7);
    const RestrictionMatrix m = tst::random_matrix(rng, 5);
    CHECK(m.transposed().transposed() == m);
    const Permutation p = Permutation::parse("35142");
    const RestrictionMatrix r = m.rows_permuted(p);
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) CHECK(r.entry(i, j) == m.entry(p.at(i), j));
    const RestrictionMatrix c = m.cols_permuted(p);
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) CHECK(c.entry(i, j) == m.entry(i, p.at(j)));
}

TEST_CASE("permanent of reference matrices") {
    CHECK(permanent(RestrictionMatrix(0)) == 1);
    CHECK(permanent(RestrictionMatrix(1, 0)) == 0);
    for (int n = 1; n <= 8; ++n) {
        RestrictionMatrix id(n, 0);
        for (int i = 1; i <= n; ++i) id.set(i, i, 1);
        CHECK(permanent(id) == 1);
        CHECK(permanent(RestrictionMatrix(n, 1)) == factorial(n));
    }
    RestrictionMatrix zrow(3, 1);
    for (int j = 1; j <= 3; ++j) zrow.set(2, j, 0);
    CHECK(permanent(zrow) == 0);
}

TEST_CASE("permanent agrees with the naive definition on a random corpus") {
    std::mt19937 rng(20260818);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const RestrictionMatrix m = tst::random_matrix(rng, n);
        const BigInt expect = permanent_naive(m);
        CHECK(permanent(m) == expect);
        CHECK(count_matching_brute(m) == expect);
    }
}

TEST_CASE("permanent is invariant under transposition and row/column shuffles") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        const RestrictionMatrix m = tst::random_matrix(rng, n);
        const BigInt v = permanent(m);
        CHECK(permanent(m.transposed()) == v);
        const Permutation p = tst::random_permutation(rng, n);
        CHECK(permanent(m.rows_permuted(p)) == v);
        CHECK(permanent(m.cols_permuted(p)) == v);
    }
}

TEST_CASE("permanent of the qk matrices hits the closed form") {
    for (int k = 3; k <= 5; ++k)
        for (int n = k; n <= 9; ++n)
            CHECK(permanent(RestrictionMatrix::qk(k, n)) ==
                  factorial(k - 1) * int_pow(k - 1, n - k + 1));
}

TEST_CASE("permanents past the caps are refused") {
    CHECK_THROWS_AS(permanent(RestrictionMatrix(25)), ResourceLimitError);
    CHECK_THROWS_AS(permanent_naive(RestrictionMatrix(10)), ResourceLimitError);
    CHECK_THROWS_AS(count_matching_brute(RestrictionMatrix(10)), ResourceLimitError);
}

TEST_CASE("wider matrices still match across the parallel split") {
    // n = 13 exercises the multi-worker subset split; cross-check against the
    // closed form rather than the (capped) naive sum.
    CHECK(permanent(RestrictionMatrix::qk(4, 13)) == factorial(3) * int_pow(3, 10));
    CHECK(permanent(RestrictionMatrix(12, 1)) == factorial(12));
}
