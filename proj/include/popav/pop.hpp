#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "popav/permutation.hpp"

namespace popav {

/**
 * A partially ordered pattern (POP): a strict partial order on labels 1..k.
 * A permutation p contains the POP when some subsequence p_{i_1} ... p_{i_k}
 * (i_1 < ... < i_k) satisfies p_{i_a} > p_{i_b} whenever a > b in the order.
 *
 * Relations are stored transitively closed; construction rejects cycles.
 *
 * Text forms accepted by parse():
 *   "size=4; 1>2; 1>4"   explicit covering relations (">" or "<")
 *   "lambda"             size 4, 1>2 and 1>4
 *   "Qk:5"               size k, 1 above all others
 *   "Qkj:5,2"            size k, label j above all others
 *   "Pk:4"               size k, 1>3
 *   "Rk:4"               size k, 1>k
 */
class Pop {
public:
    Pop(int k, const std::vector<std::pair<int, int>>& greater_pairs);

    static Pop parse(const std::string& text);

    static Pop lambda();
    static Pop qk(int k);
    static Pop qkj(int k, int j);
    static Pop pk(int k);
    static Pop rk(int k);

    int size() const { return k_; }

    // Whether label a is above label b.
    bool greater(int a, int b) const {
        return (gt_[static_cast<std::size_t>(a - 1)] >> (b - 1)) & 1u;
    }

    // Labels below a, as a bitmask over labels-1.
    std::uint32_t below_mask(int a) const { return gt_[static_cast<std::size_t>(a - 1)]; }

    // All k-permutations consistent with the order; exactly its linear
    // extensions read as patterns.
    std::vector<Permutation> expand_patterns() const;

    std::string str() const;

    friend bool operator==(const Pop&, const Pop&) = default;

private:
    int k_ = 0;
    std::vector<std::uint32_t> gt_; // gt_[a-1] bit b-1: a > b after closure
};

bool contains_pop(const Permutation& p, const Pop& pop);

inline bool avoids_pop(const Permutation& p, const Pop& pop) { return !contains_pop(p, pop); }

// Number of subsequences of p forming an occurrence of the POP.
long long count_pop_occurrences(const Permutation& p, const Pop& pop);

} // namespace popav
