#include "popav/counting.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <future>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "popav/errors.hpp"

namespace popav {

namespace {

BigInt from_int128(__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                              : static_cast<unsigned __int128>(v);
    BigInt r = static_cast<std::uint64_t>(u >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(u);
    return neg ? -r : r;
}

} // namespace

RestrictionMatrix::RestrictionMatrix(int n, int fill) : n_(n) {
    if (n < 0) throw std::invalid_argument("matrix size must be nonnegative");
    if (fill < 0 || fill > 255) throw std::invalid_argument("fill must fit a byte");
    a_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
              static_cast<std::uint8_t>(fill));
}

RestrictionMatrix RestrictionMatrix::parse(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (std::size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::vector<int> row;
        if (line.find_first_of(" \t") != std::string::npos) {
            std::istringstream ls(line);
            int v;
            while (ls >> v) row.push_back(v);
        } else {
            for (char c : line) {
                if (c < '0' || c > '9') throw std::invalid_argument("bad matrix digit");
                row.push_back(c - '0');
            }
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    const int n = static_cast<int>(rows.size());
    RestrictionMatrix m(n, 0);
    for (int i = 1; i <= n; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i - 1)].size()) != n)
            throw std::invalid_argument("matrix must be square");
        for (int j = 1; j <= n; ++j) {
            const int v = rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
            if (v < 0 || v > 255) throw std::invalid_argument("matrix entry must fit a byte");
            m.set(i, j, v);
        }
    }
    return m;
}

RestrictionMatrix RestrictionMatrix::qk(int k, int n) {
    if (k < 1) throw std::invalid_argument("qk wants k >= 1");
    RestrictionMatrix m(n, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i >= j - k + 2) m.set(i, j, 1);
    return m;
}

RestrictionMatrix RestrictionMatrix::juggling(int b, int n) {
    if (b < 0) throw std::invalid_argument("juggling wants b >= 0");
    RestrictionMatrix m(n, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (j - i + b >= 0) m.set(i, j, 1);
    return m;
}

RestrictionMatrix RestrictionMatrix::transposed() const {
    RestrictionMatrix m(n_, 0);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) m.set(j, i, entry(i, j));
    return m;
}

RestrictionMatrix RestrictionMatrix::rows_permuted(const Permutation& p) const {
    if (p.size() != n_) throw std::invalid_argument("row permutation size mismatch");
    RestrictionMatrix m(n_, 0);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) m.set(i, j, entry(p.at(i), j));
    return m;
}

RestrictionMatrix RestrictionMatrix::cols_permuted(const Permutation& p) const {
    if (p.size() != n_) throw std::invalid_argument("column permutation size mismatch");
    RestrictionMatrix m(n_, 0);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) m.set(i, j, entry(i, p.at(j)));
    return m;
}

std::string RestrictionMatrix::str() const {
    bool compact = true;
    for (std::uint8_t v : a_)
        if (v > 9) compact = false;
    std::ostringstream out;
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) {
            if (!compact && j > 1) out << ' ';
            out << static_cast<int>(entry(i, j));
        }
        out << '\n';
    }
    return out.str();
}

namespace {

// Partial Ryser sum over subset indices t in [lo, hi): the term for t uses
// the column set gray(t) = t ^ (t >> 1), so consecutive t differ by one
// column toggle. Products of row sums stay under 2^127 for n <= 24, and the
// signed block accumulator is flushed to exact arithmetic every 1024 terms.
BigInt ryser_range(const std::vector<std::vector<int>>& cols, int n,
                   std::uint64_t lo, std::uint64_t hi) {
    std::vector<long long> rs(static_cast<std::size_t>(n), 0);
    std::uint64_t g = lo ^ (lo >> 1);
    int parity = std::popcount(g) & 1;
    for (int j = 0; j < n; ++j)
        if ((g >> j) & 1)
            for (int i = 0; i < n; ++i)
                rs[static_cast<std::size_t>(i)] += cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];

    BigInt total = 0;
    __int128 block = 0;
    int pending = 0;
    for (std::uint64_t t = lo; t < hi; ++t) {
        unsigned __int128 prod = 1;
        for (int i = 0; i < n && prod; ++i)
            prod *= static_cast<unsigned __int128>(rs[static_cast<std::size_t>(i)]);
        if (prod) {
            block += parity ? -static_cast<__int128>(prod) : static_cast<__int128>(prod);
            if (++pending == 1024) {
                total += from_int128(block);
                block = 0;
                pending = 0;
            }
        }
        if (t + 1 < hi) {
            const int j = std::countr_zero(t + 1);
            const int dir = ((g >> j) & 1) ? -1 : +1;
            g ^= std::uint64_t{1} << j;
            parity ^= 1;
            for (int i = 0; i < n; ++i)
                rs[static_cast<std::size_t>(i)] += dir * cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        }
    }
    total += from_int128(block);
    return total;
}

} // namespace

BigInt permanent(const RestrictionMatrix& m) {
    const int n = m.size();
    if (n > 24) throw ResourceLimitError("permanent capped at n = 24");
    if (n == 0) return 1;

    std::vector<std::vector<int>> cols(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n)));
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i)
            cols[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = m.entry(i, j);

    const std::uint64_t count = std::uint64_t{1} << n;
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    unsigned workers = std::min<unsigned>(hw, 8);
    if (count < 4096) workers = 1;

    BigInt sum = 0;
    if (workers == 1) {
        sum = ryser_range(cols, n, 1, count);
    } else {
        std::vector<std::future<BigInt>> parts;
        const std::uint64_t span = (count - 1) / workers + 1;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t lo = std::max<std::uint64_t>(1, w * span);
            const std::uint64_t hi = std::min<std::uint64_t>(count, (w + 1) * span);
            if (lo >= hi) continue;
            parts.push_back(std::async(std::launch::async,
                                       [&cols, n, lo, hi] { return ryser_range(cols, n, lo, hi); }));
        }
        for (auto& f : parts) sum += f.get();
    }
    if (n & 1) sum = -sum;
    return sum;
}

BigInt permanent_naive(const RestrictionMatrix& m) {
    const int n = m.size();
    if (n > 9) throw ResourceLimitError("permanent_naive capped at n = 9");
    if (n == 0) return 1;
    BigInt sum = 0;
    for_each_permutation(n, [&](const std::vector<int>& v) {
        unsigned __int128 prod = 1;
        for (int i = 1; i <= n && prod; ++i)
            prod *= static_cast<unsigned __int128>(m.entry(i, v[static_cast<std::size_t>(i - 1)]));
        if (prod) sum += from_int128(static_cast<__int128>(prod));
    });
    return sum;
}

BigInt count_matching_brute(const RestrictionMatrix& m) {
    const int n = m.size();
    if (n > 9) throw ResourceLimitError("count_matching_brute capped at n = 9");
    if (n == 0) return 1;
    long long count = 0;
    for_each_permutation(n, [&](const std::vector<int>& v) {
        for (int i = 1; i <= n; ++i)
            if (!m.entry(i, v[static_cast<std::size_t>(i - 1)])) return;
        ++count;
    });
    return BigInt(count);
}

} // namespace popav
