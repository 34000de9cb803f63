#pragma once

#include <string>
#include <vector>

#include "popav/numbers.hpp"
#include "popav/permutation.hpp"
#include "popav/pop.hpp"

namespace popav {

// Scans all of S_n, keeping the permutations avoiding every listed pattern
// (or the POP). Lexicographic output; split by first value across workers and
// merged in order, so the result is worker-count independent.
// n > cap raises ResourceLimitError.
std::vector<Permutation> brute_force_av(const std::vector<Permutation>& patterns, int n,
                                        int cap = 10);
std::vector<Permutation> brute_force_av(const Pop& pop, int n, int cap = 10);

// The eight size-4 patterns {2413, 2431, 4213, 3412, 3421, 4231, 4321, 4312}
// whose avoiders are equinumerous with the lambda-avoiders.
const std::vector<Permutation>& p_basis();

// Structured generators: build the avoidance sets from their decomposition
// structure, no filtering. Each equals brute_force_av as a set and is sorted
// lexicographically.

// Sum-indecomposables: for n >= 4 the n skew-decomposables (two with a
// two-element tail, n-2 with a one-element tail) plus the n-3 increasing
// double-block inflations of 2413; closed under direct sum with a
// sum-indecomposable left part.
std::vector<Permutation> structured_av_lambda(int n);

// Mirror construction for the eight-pattern basis (indecomposables: four
// skew shapes plus inflations of 3142 and 41352).
std::vector<Permutation> structured_av_pbasis(int n);

// Direct sums of atoms 1 and 21; the image of the composition map.
std::vector<Permutation> structured_av_p3(int n);

struct P4Parts {
    std::vector<Permutation> a; // 12[1, s],      s avoiding the size-4 POP
    std::vector<Permutation> b; // 12[21, s],     s avoiding the size-4 POP
    std::vector<Permutation> c; // 21[s, 1],      s avoiding the size-3 POP
    std::vector<Permutation> d; // 3142[1,1,s,1], s avoiding the size-3 POP

    std::vector<Permutation> all() const; // sorted union
};

// The four-way partition of the size-4 1>3 avoiders, n >= 4.
P4Parts structured_av_p4_parts(int n);
std::vector<Permutation> structured_av_p4(int n);

// Direct sums over the atom set {1, 21, 231, 312, 321, 2413}.
std::vector<Permutation> structured_av_r4(int n);

// Insertion recursion: every avoider arises from an (n-1)-avoider by placing
// n in one of the last k-1 slots.
std::vector<Permutation> structured_av_qk(int k, int n);

enum class Family { Lambda, PBasis, P3, P4, R4, Sfrak, Qk };

struct FamilySpec {
    Family fam = Family::Lambda;
    int k = 0; // Qk only

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// Accepts "lambda", "P", "P3", "P4", "R4", "Sfrak", "Qk:<k>" (also "Q<k>").
FamilySpec parse_family(const std::string& name);
std::string family_name(const FamilySpec& spec);

// Whether a single defining POP is available via family_pop. False for the
// eight-pattern basis (classical patterns, not one POP) and for Sfrak (the
// bounded-displacement set, equinumerous with the R4 avoiders but not an
// avoidance set).
bool family_has_pop(const FamilySpec& spec);
Pop family_pop(const FamilySpec& spec);

std::vector<Permutation> structured_av(const FamilySpec& spec, int n);
std::vector<Permutation> brute_av(const FamilySpec& spec, int n, int cap = 10);

// Exact count by closed form or recursion, memoized:
//   Lambda/PBasis: a_n = s_n + sum s_i a_{n-i}, s_1 = 1, s_i = 2i-3 (i >= 2)
//   P3: Fib(n+1)      P4: n * Fib(n)      Qk: (k-1)! (k-1)^(n-k+1) for n >= k
//   R4/Sfrak: a_n = a_{n-1} + a_{n-2} + 3 a_{n-3} + a_{n-4}, a_0..a_3 = 1,1,2,6
BigInt count_av(const FamilySpec& spec, int n);

} // namespace popav
