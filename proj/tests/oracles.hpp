#pragma once

// Reference implementations used across the test suite. These are written
// straight from the definitions and stay independent of the library's
// optimized code paths, so agreement is meaningful.

#include <algorithm>
#include <random>
#include <vector>

#include "popav/counting.hpp"
#include "popav/permutation.hpp"
#include "popav/pop.hpp"

namespace popav::testing {

// Every length-n value vector in lexicographic order, by std::next_permutation.
inline std::vector<std::vector<int>> raw_perms(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

// Walks all k-subsets of positions, calling test(c) with 0-based indices until
// it returns true. Returns whether any subset passed.
template <class Test>
inline bool any_subset(int n, int k, Test&& test) {
    if (k > n) return false;
    if (k == 0) return test(std::vector<int>{});
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (test(c)) return true;
        int i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++c[static_cast<std::size_t>(i)];
        for (int t = i + 1; t < k; ++t)
            c[static_cast<std::size_t>(t)] = c[static_cast<std::size_t>(t - 1)] + 1;
    }
}

// Classical containment by scanning all subsequences.
inline bool oracle_contains_pattern(const Permutation& p, const Permutation& pat) {
    const int k = pat.size();
    return any_subset(p.size(), k, [&](const std::vector<int>& c) {
        for (int a = 1; a <= k; ++a)
            for (int b = 1; b <= k; ++b)
                if (pat.at(a) < pat.at(b) &&
                    p.at(c[static_cast<std::size_t>(a - 1)] + 1) >=
                        p.at(c[static_cast<std::size_t>(b - 1)] + 1))
                    return false;
        return true;
    });
}

// POP containment straight from the definition: some k positions whose values
// satisfy every related label pair.
inline bool oracle_contains_pop(const Permutation& p, const Pop& pop) {
    const int k = pop.size();
    return any_subset(p.size(), k, [&](const std::vector<int>& c) {
        for (int a = 1; a <= k; ++a)
            for (int b = 1; b <= k; ++b)
                if (pop.greater(a, b) &&
                    p.at(c[static_cast<std::size_t>(a - 1)] + 1) <=
                        p.at(c[static_cast<std::size_t>(b - 1)] + 1))
                    return false;
        return true;
    });
}

inline long long oracle_count_pop(const Permutation& p, const Pop& pop) {
    const int k = pop.size();
    long long count = 0;
    any_subset(p.size(), k, [&](const std::vector<int>& c) {
        for (int a = 1; a <= k; ++a)
            for (int b = 1; b <= k; ++b)
                if (pop.greater(a, b) &&
                    p.at(c[static_cast<std::size_t>(a - 1)] + 1) <=
                        p.at(c[static_cast<std::size_t>(b - 1)] + 1))
                    return false;
        ++count;
        return false; // keep scanning
    });
    return count;
}

// Maximal direct-sum components, by the prefix criterion: the first i
// positions hold values 1..i exactly when a cut is possible.
inline std::vector<Permutation> oracle_sum_components(const Permutation& p) {
    std::vector<Permutation> out;
    int start = 1, hi = 0;
    for (int i = 1; i <= p.size(); ++i) {
        hi = std::max(hi, p.at(i));
        if (hi == i) {
            std::vector<int> w;
            for (int t = start; t <= i; ++t) w.push_back(p.at(t) - (start - 1));
            out.emplace_back(std::move(w));
            start = i + 1;
        }
    }
    return out;
}

inline RestrictionMatrix random_matrix(std::mt19937& rng, int n, double density = 0.6) {
    RestrictionMatrix m(n, 0);
    std::bernoulli_distribution bit(density);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m.set(i, j, bit(rng) ? 1 : 0);
    return m;
}

inline Permutation random_permutation(std::mt19937& rng, int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(v.begin(), v.end(), rng);
    return Permutation(std::move(v));
}

} // namespace popav::testing
