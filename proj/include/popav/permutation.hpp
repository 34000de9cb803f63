#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

namespace popav {

/**
 * A permutation of [n] in one-line notation. Values are 1-based; n = 0 (the
 * empty permutation) is a valid value and acts as the identity for sums and
 * as a vanishing block under inflation.
 *
 * Text form: a digit string for n <= 9 ("2413"), comma-separated otherwise
 * ("11,2,7,..."). parse() accepts both for any n.
 */
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> vals);

    static Permutation identity(int n);
    static Permutation parse(const std::string& text);

    int size() const { return static_cast<int>(vals_.size()); }
    bool empty() const { return vals_.empty(); }

    // 1-based position access.
    int at(int pos) const { return vals_.at(static_cast<std::size_t>(pos) - 1); }

    const std::vector<int>& vals() const { return vals_; }

    std::string str() const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> vals_;
};

// Flattens any sequence of distinct integers to the permutation with the same
// relative order: reduce(1576) = 1243, reduce(423) = 312.
Permutation reduce(const std::vector<int>& word);

// Classical pattern containment: some subsequence of p is order-isomorphic to
// patt. Backtracking over positions with prefix order-isomorphism pruning.
bool contains_pattern(const Permutation& p, const Permutation& patt);

bool avoids_all(const Permutation& p, const std::vector<Permutation>& patterns);

// Whether positions [i, j] (1-based, inclusive) hold a contiguous value range.
bool is_interval(const Permutation& p, int i, int j);

// A permutation is simple when its only intervals are trivial (length 0, 1, n).
// O(n^2) min/max window scan.
bool is_simple(const Permutation& p);

Permutation direct_sum(const Permutation& a, const Permutation& b); // 12[a,b]
Permutation skew_sum(const Permutation& a, const Permutation& b);   // 21[a,b]

// Substitution: replaces the i-th entry of q by a block order-isomorphic to
// blocks[i], block heights ordered by q's values. Empty blocks vanish (the
// quotient entry is deleted and the rest reduced).
Permutation inflate(const Permutation& q, const std::vector<Permutation>& blocks);

struct Decomposition {
    Permutation quotient;
    std::vector<Permutation> blocks;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Canonical substitution decomposition. The quotient is simple; for quotient
// 12 (resp. 21) the first block is the shortest sum- (skew-) indecomposable
// prefix, which makes the decomposition unique. decompose(p) round-trips
// through inflate for every nonempty p.
Decomposition decompose(const Permutation& p);

bool is_sum_decomposable(const Permutation& p);
bool is_skew_decomposable(const Permutation& p);

// Separable = avoids both 2413 and 3142.
bool is_separable(const Permutation& p);

Permutation inverse(const Permutation& p);

// All n-permutations in lexicographic order. Guarded by a cap since the list
// is n!-sized; prefer for_each_permutation for scans.
std::vector<Permutation> all_permutations(int n);

// Applies fn to every n-permutation in lexicographic order without
// materializing the full list. fn receives a value vector it must not retain.
template <class F>
void for_each_permutation(int n, F&& fn) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    if (n == 0) return;
    do {
        fn(const_cast<const std::vector<int>&>(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

} // namespace popav
