#include "popav/structures.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace popav {

namespace {

std::vector<int> split_ints(const std::string& text, char sep) {
    std::vector<int> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, sep)) {
        std::istringstream ts(token);
        int v;
        while (ts >> v) out.push_back(v);
    }
    return out;
}

} // namespace

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
    for (int x : parts)
        if (x != 1 && x != 2) throw std::invalid_argument("composition parts must be 1 or 2");
}

Composition Composition::parse(const std::string& text) {
    return Composition(split_ints(text, '+'));
}

int Composition::total() const {
    int t = 0;
    for (int x : parts) t += x;
    return t;
}

std::string Composition::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out << '+';
        out << parts[i];
    }
    return out.str();
}

MarkedComposition::MarkedComposition(std::vector<int> p, int m) : parts(std::move(p)), mark(m) {
    for (int x : parts)
        if (x != 1 && x != 2) throw std::invalid_argument("composition parts must be 1 or 2");
    if (mark < 1 || mark >= static_cast<int>(parts.size()))
        throw std::invalid_argument("mark must name a part with a right neighbor");
    if (parts[static_cast<std::size_t>(mark - 1)] != parts[static_cast<std::size_t>(mark)])
        throw std::invalid_argument("marked parts must be equal");
}

MarkedComposition MarkedComposition::parse(const std::string& text) {
    std::vector<int> parts;
    int mark = 0;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, '+')) {
        if (!token.empty() && token.front() == '[') {
            if (mark != 0) throw std::invalid_argument("more than one mark");
            mark = static_cast<int>(parts.size()) + 1;
            token.erase(token.begin());
        }
        if (!token.empty() && token.back() == ']') {
            token.pop_back();
            if (mark != static_cast<int>(parts.size()))
                throw std::invalid_argument("mark must span two adjacent parts");
        }
        std::istringstream ts(token);
        int v;
        if (!(ts >> v)) throw std::invalid_argument("bad composition part");
        parts.push_back(v);
    }
    return MarkedComposition(std::move(parts), mark);
}

int MarkedComposition::total() const {
    int t = 0;
    for (int x : parts) t += x;
    return t;
}

std::string MarkedComposition::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out << '+';
        if (static_cast<int>(i) + 1 == mark) out << '[';
        out << parts[i];
        if (static_cast<int>(i) == mark) out << ']';
    }
    return out.str();
}

std::vector<Composition> gen_compositions(int n) {
    if (n < 0) throw std::invalid_argument("composition total must be nonnegative");
    std::vector<Composition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int left) -> void {
        if (left == 0) {
            out.push_back(Composition(parts));
            return;
        }
        for (int part = 1; part <= 2 && part <= left; ++part) {
            parts.push_back(part);
            self(self, left - part);
            parts.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

std::vector<MarkedComposition> gen_marked_compositions(int n) {
    std::vector<MarkedComposition> out;
    for (const auto& c : gen_compositions(n))
        for (int m = 1; m + 1 <= static_cast<int>(c.parts.size()); ++m)
            if (c.parts[static_cast<std::size_t>(m - 1)] == c.parts[static_cast<std::size_t>(m)])
                out.emplace_back(c.parts, m);
    return out;
}

JugglingSequence::JugglingSequence(std::vector<int> t, int b) : throws(std::move(t)), balls(b) {
    if (balls < 0) throw std::invalid_argument("ball count must be nonnegative");
}

JugglingSequence JugglingSequence::parse(const std::string& text, int balls) {
    return JugglingSequence(split_ints(text, ','), balls);
}

std::string JugglingSequence::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < throws.size(); ++i) {
        if (i) out << ',';
        out << throws[i];
    }
    return out.str();
}

bool is_ground_state_juggling(const JugglingSequence& s) {
    const int n = s.period();
    const int b = s.balls;
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        const int t = s.throws[static_cast<std::size_t>(i - 1)];
        if (t < 0) return false;
        const int slot = t + i - b;
        if (slot < 1 || slot > n || hit[static_cast<std::size_t>(slot - 1)]) return false;
        hit[static_cast<std::size_t>(slot - 1)] = 1;
    }
    return true;
}

std::vector<JugglingSequence> gen_ground_juggling(int n, int b) {
    if (n < 0 || b < 0) throw std::invalid_argument("period and balls must be nonnegative");
    // The landing slots t_i + i - b form a permutation s of [n] with
    // s_i >= i - b; throws increase with slots, so lexicographic in s is
    // lexicographic in throws.
    std::vector<JugglingSequence> out;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<int> throws(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i > n) {
            out.emplace_back(throws, b);
            return;
        }
        for (int slot = std::max(1, i - b); slot <= n; ++slot) {
            if (used[static_cast<std::size_t>(slot - 1)]) continue;
            used[static_cast<std::size_t>(slot - 1)] = 1;
            throws[static_cast<std::size_t>(i - 1)] = slot - i + b;
            self(self, i + 1);
            used[static_cast<std::size_t>(slot - 1)] = 0;
        }
    };
    rec(rec, 1);
    return out;
}

bool is_shrub_forest(const Permutation& p) {
    const int n = p.size();
    if (n % 3 != 0) return false;
    static const std::vector<Permutation> banned = {
        Permutation::parse("231"), Permutation::parse("312"), Permutation::parse("321")};
    if (!avoids_all(p, banned)) return false;
    for (int h = 0; 3 * h < n; ++h) {
        const int root = p.at(3 * h + 1);
        if (root > p.at(3 * h + 2) || root > p.at(3 * h + 3)) return false;
    }
    return true;
}

std::vector<Permutation> gen_shrub_forests(int heaps) {
    if (heaps < 0) throw std::invalid_argument("heap count must be nonnegative");
    // Avoiders of {231, 312, 321} are exactly the direct sums of 1 and 21
    // atoms; build those of length 3*heaps and keep the ones satisfying the
    // heap-root condition.
    std::vector<Permutation> out;
    const int n = 3 * heaps;
    std::vector<Permutation> atoms = {Permutation::parse("1"), Permutation::parse("21")};
    auto rec = [&](auto&& self, const Permutation& acc) -> void {
        if (acc.size() == n) {
            if (is_shrub_forest(acc)) out.push_back(acc);
            return;
        }
        for (const auto& a : atoms)
            if (acc.size() + a.size() <= n) self(self, direct_sum(acc, a));
    };
    rec(rec, Permutation());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long long> displacement_profile(const Permutation& p) {
    std::vector<long long> out(static_cast<std::size_t>(p.size()));
    long long run = 0;
    for (int i = 1; i <= p.size(); ++i) {
        run += p.at(i) - i;
        out[static_cast<std::size_t>(i - 1)] = run;
    }
    return out;
}

bool in_bounded_displacement(const Permutation& p, long long bound) {
    long long run = 0;
    for (int i = 1; i <= p.size(); ++i) {
        run += p.at(i) - i;
        if (run > bound) return false;
    }
    return true;
}

std::vector<Permutation> gen_bounded_displacement(int n) {
    if (n < 0) throw std::invalid_argument("length must be nonnegative");
    static const std::vector<Permutation> atoms = {
        Permutation::parse("1"),   Permutation::parse("21"),  Permutation::parse("231"),
        Permutation::parse("312"), Permutation::parse("321"), Permutation::parse("3142")};
    std::vector<Permutation> out;
    auto rec = [&](auto&& self, const Permutation& acc) -> void {
        if (acc.size() == n) {
            out.push_back(acc);
            return;
        }
        for (const auto& a : atoms)
            if (acc.size() + a.size() <= n) self(self, direct_sum(acc, a));
    };
    rec(rec, Permutation());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace popav
