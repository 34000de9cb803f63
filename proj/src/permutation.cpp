#include "popav/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "popav/errors.hpp"

namespace popav {

Permutation::Permutation(std::vector<int> vals) : vals_(std::move(vals)) {
    const int n = size();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : vals_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("not a permutation of [n]");
        seen[static_cast<std::size_t>(v - 1)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 0) throw std::invalid_argument("negative length");
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> v;
    if (text.find(',') != std::string::npos || text.find(' ') != std::string::npos) {
        std::string token;
        std::istringstream in(text);
        while (std::getline(in, token, ',')) {
            std::istringstream ts(token);
            int x;
            while (ts >> x) v.push_back(x);
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') throw std::invalid_argument("bad permutation digit");
            v.push_back(c - '0');
        }
    }
    return Permutation(std::move(v));
}

std::string Permutation::str() const {
    std::ostringstream out;
    if (size() <= 9) {
        for (int v : vals_) out << v;
    } else {
        for (int i = 0; i < size(); ++i) {
            if (i) out << ',';
            out << vals_[static_cast<std::size_t>(i)];
        }
    }
    return out.str();
}

Permutation reduce(const std::vector<int>& word) {
    const int n = static_cast<int>(word.size());
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return word[static_cast<std::size_t>(a)] < word[static_cast<std::size_t>(b)]; });
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int rank = 0; rank < n; ++rank) {
        const int pos = order[static_cast<std::size_t>(rank)];
        if (rank > 0 && word[static_cast<std::size_t>(pos)]
                            == word[static_cast<std::size_t>(order[static_cast<std::size_t>(rank - 1)])])
            throw std::invalid_argument("reduce needs distinct entries");
        out[static_cast<std::size_t>(pos)] = rank + 1;
    }
    return Permutation(std::move(out));
}

namespace {

bool extend_match(const std::vector<int>& p, const std::vector<int>& patt,
                  std::vector<int>& chosen, int from) {
    const int k = static_cast<int>(patt.size());
    const int t = static_cast<int>(chosen.size());
    if (t == k) return true;
    const int n = static_cast<int>(p.size());
    for (int pos = from; pos <= n - (k - t); ++pos) {
        const int v = p[static_cast<std::size_t>(pos)];
        bool fits = true;
        for (int s = 0; s < t && fits; ++s) {
            const bool want_above = patt[static_cast<std::size_t>(t)] > patt[static_cast<std::size_t>(s)];
            if ((v > chosen[static_cast<std::size_t>(s)]) != want_above) fits = false;
        }
        if (!fits) continue;
        chosen.push_back(v);
        if (extend_match(p, patt, chosen, pos + 1)) return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

bool contains_pattern(const Permutation& p, const Permutation& patt) {
    if (patt.empty()) return true;
    if (patt.size() > p.size()) return false;
    std::vector<int> chosen;
    chosen.reserve(static_cast<std::size_t>(patt.size()));
    return extend_match(p.vals(), patt.vals(), chosen, 0);
}

bool avoids_all(const Permutation& p, const std::vector<Permutation>& patterns) {
    for (const auto& patt : patterns)
        if (contains_pattern(p, patt)) return false;
    return true;
}

bool is_interval(const Permutation& p, int i, int j) {
    if (i < 1 || j > p.size() || i > j) throw std::out_of_range("interval bounds");
    int lo = p.at(i), hi = p.at(i);
    for (int t = i + 1; t <= j; ++t) {
        lo = std::min(lo, p.at(t));
        hi = std::max(hi, p.at(t));
    }
    return hi - lo == j - i;
}

bool is_simple(const Permutation& p) {
    const int n = p.size();
    const auto& v = p.vals();
    for (int i = 0; i < n; ++i) {
        int lo = v[static_cast<std::size_t>(i)], hi = lo;
        for (int j = i + 1; j < n; ++j) {
            lo = std::min(lo, v[static_cast<std::size_t>(j)]);
            hi = std::max(hi, v[static_cast<std::size_t>(j)]);
            if (j - i + 1 == n) break; // the full window is always an interval
            if (hi - lo == j - i) return false;
        }
    }
    return true;
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
    std::vector<int> v = a.vals();
    v.reserve(static_cast<std::size_t>(a.size() + b.size()));
    for (int x : b.vals()) v.push_back(x + a.size());
    return Permutation(std::move(v));
}

Permutation skew_sum(const Permutation& a, const Permutation& b) {
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(a.size() + b.size()));
    for (int x : a.vals()) v.push_back(x + b.size());
    for (int x : b.vals()) v.push_back(x);
    return Permutation(std::move(v));
}

Permutation inflate(const Permutation& q, const std::vector<Permutation>& blocks) {
    if (static_cast<int>(blocks.size()) != q.size())
        throw std::invalid_argument("inflate: one block per quotient entry");
    const int k = q.size();
    // Height of each block's value band, cumulative by quotient value.
    std::vector<int> band_base(static_cast<std::size_t>(k) + 1, 0);
    for (int val = 1; val <= k; ++val) {
        int owner = -1;
        for (int pos = 1; pos <= k; ++pos)
            if (q.at(pos) == val) owner = pos;
        band_base[static_cast<std::size_t>(val)] =
            band_base[static_cast<std::size_t>(val - 1)]
            + blocks[static_cast<std::size_t>(owner - 1)].size();
    }
    std::vector<int> out;
    for (int pos = 1; pos <= k; ++pos) {
        const int base = band_base[static_cast<std::size_t>(q.at(pos) - 1)];
        for (int x : blocks[static_cast<std::size_t>(pos - 1)].vals()) out.push_back(x + base);
    }
    return Permutation(std::move(out));
}

bool is_sum_decomposable(const Permutation& p) {
    const int n = p.size();
    int hi = 0;
    for (int i = 1; i < n; ++i) {
        hi = std::max(hi, p.at(i));
        if (hi == i) return true;
    }
    return false;
}

bool is_skew_decomposable(const Permutation& p) {
    const int n = p.size();
    int lo = n + 1;
    for (int i = 1; i < n; ++i) {
        lo = std::min(lo, p.at(i));
        if (lo == n - i + 1) return true;
    }
    return false;
}

namespace {

Permutation slice_reduced(const Permutation& p, int i, int j) {
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(j - i + 1));
    for (int t = i; t <= j; ++t) w.push_back(p.at(t));
    return reduce(w);
}

} // namespace

Decomposition decompose(const Permutation& p) {
    const int n = p.size();
    if (n == 0) throw std::invalid_argument("decompose needs a nonempty permutation");
    if (n == 1) return {Permutation::identity(1), {Permutation::identity(1)}};

    // Shortest proper prefix with value set [m]: sum decomposition with an
    // indecomposable first block.
    int hi = 0;
    for (int i = 1; i < n; ++i) {
        hi = std::max(hi, p.at(i));
        if (hi == i)
            return {Permutation::parse("12"), {slice_reduced(p, 1, i), slice_reduced(p, i + 1, n)}};
    }
    // Shortest proper prefix with value set [n-m+1, n]: skew decomposition.
    int lo = n + 1;
    for (int i = 1; i < n; ++i) {
        lo = std::min(lo, p.at(i));
        if (lo == n - i + 1)
            return {Permutation::parse("21"), {slice_reduced(p, 1, i), slice_reduced(p, i + 1, n)}};
    }

    // Neither: the maximal proper intervals are disjoint and the quotient is
    // simple, so a greedy left-to-right longest-interval scan finds them.
    std::vector<Permutation> blocks;
    std::vector<int> reps; // one value per block, for the quotient
    int start = 1;
    while (start <= n) {
        int lo2 = p.at(start), hi2 = p.at(start), end = start;
        for (int j = start + 1; j <= n; ++j) {
            lo2 = std::min(lo2, p.at(j));
            hi2 = std::max(hi2, p.at(j));
            if (start == 1 && j == n) break;
            if (hi2 - lo2 == j - start) end = j;
        }
        blocks.push_back(slice_reduced(p, start, end));
        reps.push_back(p.at(start));
        start = end + 1;
    }
    return {reduce(reps), std::move(blocks)};
}

bool is_separable(const Permutation& p) {
    return !contains_pattern(p, Permutation::parse("2413"))
        && !contains_pattern(p, Permutation::parse("3142"));
}

Permutation inverse(const Permutation& p) {
    std::vector<int> v(static_cast<std::size_t>(p.size()));
    for (int i = 1; i <= p.size(); ++i) v[static_cast<std::size_t>(p.at(i) - 1)] = i;
    return Permutation(std::move(v));
}

std::vector<Permutation> all_permutations(int n) {
    if (n > 10) throw ResourceLimitError("all_permutations capped at n = 10");
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const std::vector<int>& v) { out.emplace_back(v); });
    if (n == 0) out.emplace_back();
    return out;
}

} // namespace popav
