#pragma once

#include <vector>

#include "popav/permutation.hpp"

namespace popav {

// The three size-4 patterns {2413, 3412, 3421} whose simple avoiders are
// Fibonacci-counted.
const std::vector<Permutation>& fib_simple_patterns();

// Simple permutations of length n avoiding all three patterns, by scanning
// S_n. n > cap raises ResourceLimitError. Counts: Fib(n-3) for n >= 4.
std::vector<Permutation> brute_simple_avoiders(int n, int cap = 10);

// Length-raising maps: each sends a simple avoider of length m to one of
// length m+2 (f_a, f_b) or m+1 (f_c). Sources have their maximum second to
// last; the maps keep the image simple and avoiding.
Permutation f_a(const Permutation& p); // (n-1) 1 (p_1+1)...(p_{m-1}+2)(p_m+1)
Permutation f_b(const Permutation& p); // (n-1) p_1 ... p_{m-1} n p_m
Permutation f_c(const Permutation& p); // (p_1+1) 1 (p_2+1)...(p_m+1)

// Left inverses: g_a drops the first two entries, g_b drops the first entry
// and the maximum, g_c drops the second entry; each reduces.
Permutation g_a(const Permutation& p);
Permutation g_b(const Permutation& p);
Permutation g_c(const Permutation& p);

enum class SimpleFamily { A, B, C };

struct SimpleFamilies {
    std::vector<Permutation> a; // start (n-1) 1 (n-2)
    std::vector<Permutation> b; // start (n-1) (n-3), plus 3142 at n = 4
    std::vector<Permutation> c; // start (n-1) 1 (n-3)

    std::vector<Permutation> all() const; // sorted union
};

// The simple avoiders of length n, partitioned. Pinned lists for n in [4,7]
// (the empty b-family at n = 5 starves the c recursion); for n >= 8 built as
// a_n = f_a(all_{n-2}), b_n = f_b(all_{n-2}), c_n = f_c(b_{n-1}).
// Family sizes: |a| = |b| = Fib(n-5), |c| = Fib(n-6) for n >= 6.
SimpleFamilies simple_families(int n);

std::vector<Permutation> gen_simple_family(int n);

} // namespace popav
