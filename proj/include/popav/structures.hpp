#pragma once

#include <string>
#include <vector>

#include "popav/permutation.hpp"

namespace popav {

/** A composition of n into parts 1 and 2. Text form "1+2+1". */
struct Composition {
    std::vector<int> parts;

    Composition() = default;
    explicit Composition(std::vector<int> p);

    static Composition parse(const std::string& text);

    int total() const;
    std::string str() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;
};

/**
 * A composition with one marked level: two equal consecutive parts, marked by
 * the 1-based index of the left one. Text form brackets the level: "1+[2+2]".
 */
struct MarkedComposition {
    std::vector<int> parts;
    int mark = 0; // 1 <= mark < parts.size(), parts[mark-1] == parts[mark]

    MarkedComposition() = default;
    MarkedComposition(std::vector<int> p, int m);

    static MarkedComposition parse(const std::string& text);

    int total() const;
    std::string str() const;

    friend bool operator==(const MarkedComposition&, const MarkedComposition&) = default;
    friend auto operator<=>(const MarkedComposition&, const MarkedComposition&) = default;
};

// All compositions of n, lexicographic by part sequence. |result| = Fib(n+1).
std::vector<Composition> gen_compositions(int n);

// All marked compositions of n, lexicographic by (parts, mark).
// |result| = (n-1) * Fib(n-1).
std::vector<MarkedComposition> gen_marked_compositions(int n);

/** A period-n sequence of throw heights with a fixed ball count. */
struct JugglingSequence {
    std::vector<int> throws;
    int balls = 0;

    JugglingSequence() = default;
    JugglingSequence(std::vector<int> t, int b);

    static JugglingSequence parse(const std::string& text, int balls);

    int period() const { return static_cast<int>(throws.size()); }
    std::string str() const;

    friend bool operator==(const JugglingSequence&, const JugglingSequence&) = default;
    friend auto operator<=>(const JugglingSequence&, const JugglingSequence&) = default;
};

// Valid ground-state pattern: throws are nonnegative and i -> t_i + i - b is
// a bijection of [n] (landing slots collide nowhere and stay inside the
// period).
bool is_ground_state_juggling(const JugglingSequence& s);

// All valid ground-state b-ball period-n sequences, lexicographic by throws.
// |result| = (b+1)^(n-b) * b! for n >= b, else n!.
std::vector<JugglingSequence> gen_ground_juggling(int n, int b);

// Membership in the 3n-permutation family built from n three-element heaps:
// avoids 231, 312, 321 and each p_{3i+1} is below p_{3i+2} and p_{3i+3}
// (every heap, the first included).
bool is_shrub_forest(const Permutation& p);

// All such permutations with the given heap count, lexicographic.
// |result| = 2 * 3^(heaps-1).
std::vector<Permutation> gen_shrub_forests(int heaps);

// Prefix sums of the displacements p_i - i. Entry n is always 0 and every
// prefix sum is nonnegative.
std::vector<long long> displacement_profile(const Permutation& p);

// Whether every displacement prefix sum is <= bound.
bool in_bounded_displacement(const Permutation& p, long long bound = 2);

// All n-permutations whose displacement prefix sums stay <= 2, lexicographic.
// Generated structurally: direct sums over the atom set
// {1, 21, 231, 312, 321, 3142}.
std::vector<Permutation> gen_bounded_displacement(int n);

} // namespace popav
