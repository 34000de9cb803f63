#include "indecomposables.hpp"

#include <mutex>
#include <stdexcept>

namespace popav::detail {

namespace {

Permutation inflate_ids(const char* quotient, const std::vector<int>& sizes) {
    std::vector<Permutation> blocks;
    blocks.reserve(sizes.size());
    for (int s : sizes) blocks.push_back(Permutation::identity(s));
    return inflate(Permutation::parse(quotient), blocks);
}

PairedIndecomposables build(int m) {
    PairedIndecomposables out;
    if (m == 1) {
        out.lhs = out.rhs = {Permutation::parse("1")};
        return out;
    }
    if (m == 2) {
        out.lhs = out.rhs = {Permutation::parse("21")};
        return out;
    }
    if (m == 3) {
        out.lhs = {Permutation::parse("231"), Permutation::parse("312"),
                   Permutation::parse("321")};
        out.rhs = {Permutation::parse("312"), Permutation::parse("231"),
                   Permutation::parse("321")};
        return out;
    }

    auto pair = [&](Permutation l, Permutation r) {
        out.lhs.push_back(std::move(l));
        out.rhs.push_back(std::move(r));
    };

    // 2 3 ... m 1  <->  m 1 2 ... (m-1)
    pair(skew_sum(Permutation::identity(m - 1), Permutation::identity(1)),
         skew_sum(Permutation::identity(1), Permutation::identity(m - 1)));
    // 2 ... (m-2) m (m-1) 1  <->  m 1 ... (m-3) (m-1) (m-2)
    pair(inflate(Permutation::parse("231"),
                 {Permutation::identity(m - 3), Permutation::parse("21"),
                  Permutation::identity(1)}),
         inflate(Permutation::parse("312"),
                 {Permutation::identity(1), Permutation::identity(m - 3),
                  Permutation::parse("21")}));
    // 3 4 ... m 2 1  <->  3 2 4 5 ... m 1
    pair(skew_sum(Permutation::identity(m - 2), Permutation::parse("21")),
         inflate(Permutation::parse("231"),
                 {Permutation::parse("21"), Permutation::identity(m - 3),
                  Permutation::identity(1)}));
    // double-ascending inflations of 2431  <->  inflations of 41352
    for (int k = 1; k <= m - 4; ++k)
        pair(inflate_ids("2431", {k, m - 2 - k, 1, 1}),
             inflate_ids("41352", {1, k, 1, m - 3 - k, 1}));
    // double-ascending inflations of 2413  <->  inflations of 3142
    for (int k = 1; k <= m - 3; ++k)
        pair(inflate_ids("2413", {k, m - 2 - k, 1, 1}),
             inflate_ids("3142", {1, k, m - 2 - k, 1}));
    // 3 4 ... m 1 2  <->  2 3 ... m 1
    pair(skew_sum(Permutation::identity(m - 2), Permutation::parse("12")),
         skew_sum(Permutation::identity(m - 1), Permutation::identity(1)));
    return out;
}

} // namespace

const PairedIndecomposables& paired_indecomposables(int m) {
    if (m < 1) throw std::invalid_argument("indecomposables need size >= 1");
    static std::vector<PairedIndecomposables> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) < m)
        cache.push_back(build(static_cast<int>(cache.size()) + 1));
    return cache[static_cast<std::size_t>(m - 1)];
}

std::vector<Permutation> sum_components(const Permutation& p) {
    std::vector<Permutation> out;
    int start = 1, hi = 0;
    for (int i = 1; i <= p.size(); ++i) {
        hi = std::max(hi, p.at(i));
        if (hi == i) {
            std::vector<int> block;
            block.reserve(static_cast<std::size_t>(i - start + 1));
            for (int t = start; t <= i; ++t) block.push_back(p.at(t) - (start - 1));
            out.emplace_back(std::move(block));
            start = i + 1;
        }
    }
    return out;
}

} // namespace popav::detail
