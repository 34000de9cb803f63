#pragma once

#include <string>
#include <vector>

#include "popav/permutation.hpp"
#include "popav/structures.hpp"

namespace popav {

// Every map below checks membership of its input in the advertised domain
// eagerly and raises std::domain_error otherwise.

// Length-preserving bijection between the lambda-avoiders and the avoiders of
// the eight-pattern basis: rewrites the sum-indecomposable components, pairing
// the structured shape lists of the two sets.
Permutation lambda_to_P(const Permutation& p);
Permutation P_to_lambda(const Permutation& p);

// Ground-state sequences <-> avoiders of the size-(b+2) fan: the landing map
// i -> t_i + i - b is a permutation; its inverse is the avoider.
Permutation juggling_to_avQ(const JugglingSequence& s);
JugglingSequence avQ_to_juggling(const Permutation& p, int balls);

// Size-4 fan avoiders of length n <-> shrub forests of n-1 heaps. Each step
// peels the placement of the top value (one of the last three slots) into a
// three-element heap.
Permutation avQ4_to_shrub(const Permutation& p);
Permutation shrub_to_avQ4(const Permutation& p);

// Swapping positions 1 and j. An involution on permutations of any fixed
// length; j = 1 is the identity. For n <= k it carries the avoiders of the
// fan rooted at label 1 onto the avoiders of the fan rooted at label j, but
// from n = k+1 on it does not (1243 avoids the rooted size-3 fan while its
// swap 2143 contains a middle-rooted occurrence 2,4,3), so no membership of
// the output is implied or checked. Requires 1 <= j <= k <= |p|.
Permutation qkj_conjugate(const Permutation& p, int k, int j);

// The map that does carry the rooted-fan avoiders onto the avoiders of the
// fan rooted at label j. Peel maxima: in the first family the running
// maximum sits within the last k-1 slots, in the second within the first
// j-1 or last k-j slots; pairing slot indices level by level is a bijection.
// j = 1 gives the identity, j = k the full reversal. Inputs outside the
// respective family are rejected with a domain error.
Permutation qkj_rebase(const Permutation& p, int k, int j);
Permutation qkj_rebase_inv(const Permutation& p, int k, int j);

// Compositions of n <-> avoiders of the size-3 1>3 POP: parts map to atom
// blocks 1 and 21 under direct sum.
Permutation comp_to_avP3(const Composition& c);
Composition avP3_to_comp(const Permutation& p);

// Marked compositions of n+1 <-> avoiders of the size-4 1>3 POP.
Permutation marked_to_avP4(const MarkedComposition& m);
MarkedComposition avP4_to_marked(const Permutation& p);

// Avoiders of the size-4 first>last POP <-> displacement-bounded
// permutations: both are free direct sums over six atoms; reverse the summand
// order and rename 2413 <-> 3142.
Permutation avR4_to_bounded(const Permutation& p);
Permutation bounded_to_avR4(const Permutation& p);

struct BijectionReport {
    std::string name;
    int n = 0;
    std::size_t domain_size = 0;
    std::size_t codomain_size = 0;
    bool image_in_codomain = false;
    bool injective = false;
    bool surjective = false;
    bool round_trip = false;
    std::vector<std::string> failures;

    bool ok() const {
        return image_in_codomain && injective && surjective && round_trip;
    }
};

// Enumerates the domain with the structured generator and the codomain with
// an independent brute-force oracle, then checks totality, injectivity,
// surjectivity, and both round trips elementwise.
//
// Names: "lambda_P", "juggling" (uses balls), "shrub", "qkj" (uses k and j),
// "comp_P3", "marked_P4", "R4_Sfrak".
BijectionReport verify_bijection(const std::string& name, int n, int balls = -1, int k = -1,
                                 int j = -1);

// The verification sweep behind `verify --all`: every bijection at size n,
// juggling over balls 1..3, the position swap over k in {3,4}, j in [1,k].
std::vector<BijectionReport> verify_all_bijections(int n);

} // namespace popav
