#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "popav/numbers.hpp"
#include "popav/permutation.hpp"

namespace popav {

/**
 * A 0/1 position-value restriction matrix: entry(i, j) = 1 means value j may
 * sit at position i. The permanent counts the permutations every one of whose
 * placements is allowed.
 */
class RestrictionMatrix {
public:
    explicit RestrictionMatrix(int n, int fill = 1);

    // Rows of whitespace-separated 0/1 entries (or contiguous digit rows);
    // blank lines and '#' comments ignored. Must be square.
    static RestrictionMatrix parse(const std::string& text);

    // entry(i, j) = 1 iff i >= j - k + 2: the positions the value j may take
    // so that no value heads k-1 smaller later entries.
    static RestrictionMatrix qk(int k, int n);

    // entry(i, j) = 1 iff j - i + b >= 0, the throw-feasibility matrix for
    // b-ball period-n patterns. Equals qk(b + 2, n) transposed.
    static RestrictionMatrix juggling(int b, int n);

    int size() const { return n_; }

    int entry(int i, int j) const { return a_[idx(i, j)]; } // 1-based
    void set(int i, int j, int v) { a_[idx(i, j)] = static_cast<std::uint8_t>(v); }

    RestrictionMatrix transposed() const;
    RestrictionMatrix rows_permuted(const Permutation& p) const; // row i <- row p(i)
    RestrictionMatrix cols_permuted(const Permutation& p) const;

    std::string str() const;

    friend bool operator==(const RestrictionMatrix&, const RestrictionMatrix&) = default;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_)
             + static_cast<std::size_t>(j - 1);
    }

    int n_ = 0;
    std::vector<std::uint8_t> a_;
};

// Exact permanent by Ryser's inclusion-exclusion with Gray-code column
// updates, O(2^n * n). Work is split over subset ranges and merged
// deterministically. n > 24 raises ResourceLimitError.
BigInt permanent(const RestrictionMatrix& m);

// Definitional sum over all n! permutations; the independent oracle for the
// Ryser implementation. n > 9 raises ResourceLimitError.
BigInt permanent_naive(const RestrictionMatrix& m);

// Counts permutations all of whose placements are allowed by scanning S_n
// directly; for 0/1 matrices this equals the permanent. n > 9 raises
// ResourceLimitError.
BigInt count_matching_brute(const RestrictionMatrix& m);

} // namespace popav
