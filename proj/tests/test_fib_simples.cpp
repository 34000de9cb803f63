#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "popav/errors.hpp"
#include "popav/fib_simples.hpp"
#include "popav/numbers.hpp"
#include "popav/permutation.hpp"

#include "oracles.hpp"

using namespace popav;
namespace tst = popav::testing;

namespace {

std::set<Permutation> as_set(const std::vector<Permutation>& v) {
    return std::set<Permutation>(v.begin(), v.end());
}

std::set<Permutation> parse_set(const std::vector<const char*>& words) {
    std::set<Permutation> out;
    for (const char* w : words) out.insert(Permutation::parse(w));
    return out;
}

} // namespace

TEST_CASE("brute scan counts a shifted Fibonacci") {
    const std::size_t expect[] = {1, 1, 2, 3, 5, 8};
    for (int n = 4; n <= 9; ++n)
        CHECK(brute_simple_avoiders(n).size() == expect[n - 4]);
    CHECK(brute_simple_avoiders(3).empty()); // no simples of length 3
    CHECK(brute_simple_avoiders(2).size() == 2);
    CHECK_THROWS_AS(brute_simple_avoiders(11), ResourceLimitError);
}

TEST_CASE("structured family equals the brute scan") {
    for (int n = 0; n <= 9; ++n) {
        const auto structured = gen_simple_family(n);
        CHECK(std::is_sorted(structured.begin(), structured.end()));
        CHECK(as_set(structured) == as_set(brute_simple_avoiders(n)));
    }
}

TEST_CASE("pinned element sets up to length 8") {
    CHECK(as_set(gen_simple_family(4)) == parse_set({"3142"}));
    CHECK(as_set(gen_simple_family(5)) == parse_set({"41352"}));
    CHECK(as_set(gen_simple_family(6)) == parse_set({"514263", "531462"}));
    CHECK(as_set(gen_simple_family(7)) ==
          parse_set({"6152473", "6413572", "6142573"}));
    CHECK(as_set(gen_simple_family(8)) ==
          parse_set({"71625384", "71642583", "71524683", "75142683", "75314682"}));
}

TEST_CASE("family partition: starts, sizes, disjointness") {
    for (int n = 4; n <= 10; ++n) {
        const SimpleFamilies fams = simple_families(n);
        std::set<Permutation> uni;
        for (const auto* piece : {&fams.a, &fams.b, &fams.c}) {
            for (const auto& p : *piece) CHECK(p.size() == n);
            uni.insert(piece->begin(), piece->end());
        }
        CHECK(uni.size() == fams.a.size() + fams.b.size() + fams.c.size());
        CHECK(uni == as_set(gen_simple_family(n)));
        for (const auto& p : fams.a) {
            CHECK(p.at(1) == n - 1);
            CHECK(p.at(2) == 1);
            CHECK(p.at(3) == n - 2);
        }
        for (const auto& p : fams.c) {
            CHECK(p.at(1) == n - 1);
            CHECK(p.at(2) == 1);
            CHECK(p.at(3) == n - 3);
        }
        if (n >= 5)
            for (const auto& p : fams.b) {
                CHECK(p.at(1) == n - 1);
                CHECK(p.at(2) == n - 3);
            }
        if (n >= 6) {
            CHECK(BigInt(fams.a.size()) == fibonacci(n - 5));
            CHECK(BigInt(fams.b.size()) == fibonacci(n - 5));
            CHECK(BigInt(fams.c.size()) == fibonacci(n - 6));
        }
    }
}

TEST_CASE("every member is simple, avoiding, and max-second-to-last") {
    const auto& pats = fib_simple_patterns();
    for (int n = 4; n <= 10; ++n) {
        for (const auto& p : gen_simple_family(n)) {
            CHECK(is_simple(p));
            CHECK(avoids_all(p, pats));
            CHECK(p.at(n - 1) == n);
        }
    }
}

TEST_CASE("members avoid 2431 as well") {
    const Permutation probe = Permutation::parse("2431");
    for (int n = 4; n <= 10; ++n)
        for (const auto& p : gen_simple_family(n)) CHECK(!contains_pattern(p, probe));
}

TEST_CASE("raising maps preserve the family and g inverts f") {
    for (int n = 4; n <= 8; ++n) {
        const auto members = gen_simple_family(n);
        const auto up2 = as_set(gen_simple_family(n + 2));
        const auto up1 = as_set(gen_simple_family(n + 1));
        for (const auto& p : members) {
            const Permutation a = f_a(p), b = f_b(p);
            CHECK(a.size() == n + 2);
            CHECK(b.size() == n + 2);
            CHECK(up2.count(a) == 1);
            CHECK(up2.count(b) == 1);
            CHECK(g_a(a) == p);
            CHECK(g_b(b) == p);
        }
        // the single-step raise feeds on the b part only from size 6 up:
        // f_c(3142) = 41253 glues 1 and 2 into an interval, so it is not simple
        if (n >= 6) {
            const SimpleFamilies fams = simple_families(n);
            for (const auto& p : fams.b) {
                const Permutation c = f_c(p);
                CHECK(c.size() == n + 1);
                CHECK(up1.count(c) == 1);
                CHECK(g_c(c) == p);
            }
        }
    }
}

TEST_CASE("raising maps demand the maximum second to last") {
    CHECK_THROWS_AS(f_a(Permutation::parse("123")), std::domain_error);
    CHECK_THROWS_AS(f_b(Permutation::parse("321")), std::domain_error);
    CHECK_THROWS_AS(f_c(Permutation::parse("1")), std::domain_error);
    CHECK_NOTHROW(f_a(Permutation::parse("3142")));
}

TEST_CASE("tiny sizes") {
    CHECK(gen_simple_family(0) == std::vector<Permutation>{Permutation()});
    CHECK(gen_simple_family(1) == std::vector<Permutation>{Permutation::parse("1")});
    CHECK(gen_simple_family(2) ==
          std::vector<Permutation>{Permutation::parse("12"), Permutation::parse("21")});
    CHECK(gen_simple_family(3).empty());
    const SimpleFamilies fams = simple_families(3);
    CHECK(fams.a.empty());
    CHECK(fams.b.empty());
    CHECK(fams.c.empty());
}
