#pragma once

#include <utility>
#include <vector>

#include "popav/permutation.hpp"

namespace popav::detail {

// The sum-indecomposable members of the two equinumerous avoidance sets, as
// two lists per length in matched order: entry i of the first list maps to
// entry i of the second under the component-level rewrite. Sizes 1..3 pair
// {1}, {21}, {231,312,321} with themselves (231 and 312 swap); size m >= 4
// has 2m-3 entries on each side.
struct PairedIndecomposables {
    std::vector<Permutation> lhs; // blocks of the size-4 two-relation POP avoiders
    std::vector<Permutation> rhs; // blocks of the eight-pattern avoiders
};

const PairedIndecomposables& paired_indecomposables(int m);

// Maximal direct-sum components, left to right.
std::vector<Permutation> sum_components(const Permutation& p);

} // namespace popav::detail
