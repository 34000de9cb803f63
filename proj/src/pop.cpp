#include "popav/pop.hpp"

#include <sstream>
#include <stdexcept>

namespace popav {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

int parse_int(const std::string& s) {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing junk after integer");
    return v;
}

} // namespace

Pop::Pop(int k, const std::vector<std::pair<int, int>>& greater_pairs) : k_(k) {
    if (k < 1 || k > 32) throw std::invalid_argument("pop size must be in [1, 32]");
    gt_.assign(static_cast<std::size_t>(k), 0);
    for (auto [a, b] : greater_pairs) {
        if (a < 1 || a > k || b < 1 || b > k || a == b)
            throw std::invalid_argument("pop relation labels out of range");
        gt_[static_cast<std::size_t>(a - 1)] |= 1u << (b - 1);
    }
    // Close transitively; k rounds suffice for any chain.
    for (int round = 0; round < k; ++round)
        for (int a = 1; a <= k; ++a)
            for (int b = 1; b <= k; ++b)
                if (greater(a, b)) gt_[static_cast<std::size_t>(a - 1)] |= gt_[static_cast<std::size_t>(b - 1)];
    for (int a = 1; a <= k; ++a)
        if (greater(a, a)) throw std::invalid_argument("pop relations contain a cycle");
}

Pop Pop::parse(const std::string& text) {
    const std::string s = strip(text);
    if (s == "lambda") return lambda();
    auto named = [&](const std::string& prefix) -> std::string {
        if (s.rfind(prefix, 0) == 0) return s.substr(prefix.size());
        return "";
    };
    if (auto arg = named("Qkj:"); !arg.empty()) {
        std::size_t comma = arg.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("Qkj wants k,j");
        return qkj(parse_int(strip(arg.substr(0, comma))), parse_int(strip(arg.substr(comma + 1))));
    }
    if (auto arg = named("Qk:"); !arg.empty()) return qk(parse_int(strip(arg)));
    if (auto arg = named("Pk:"); !arg.empty()) return pk(parse_int(strip(arg)));
    if (auto arg = named("Rk:"); !arg.empty()) return rk(parse_int(strip(arg)));

    std::istringstream in(s);
    std::string token;
    int k = -1;
    std::vector<std::pair<int, int>> pairs;
    while (std::getline(in, token, ';')) {
        token = strip(token);
        if (token.empty()) continue;
        if (k < 0) {
            if (token.rfind("size=", 0) != 0)
                throw std::invalid_argument("pop text must start with size=<k>");
            k = parse_int(token.substr(5));
            continue;
        }
        std::size_t gt = token.find('>');
        std::size_t lt = token.find('<');
        if (gt != std::string::npos) {
            pairs.emplace_back(parse_int(strip(token.substr(0, gt))),
                               parse_int(strip(token.substr(gt + 1))));
        } else if (lt != std::string::npos) {
            pairs.emplace_back(parse_int(strip(token.substr(lt + 1))),
                               parse_int(strip(token.substr(0, lt))));
        } else {
            throw std::invalid_argument("pop relation needs > or <");
        }
    }
    if (k < 0) throw std::invalid_argument("pop text must start with size=<k>");
    return Pop(k, pairs);
}

Pop Pop::lambda() { return Pop(4, {{1, 2}, {1, 4}}); }

Pop Pop::qk(int k) {
    std::vector<std::pair<int, int>> pairs;
    for (int j = 2; j <= k; ++j) pairs.emplace_back(1, j);
    return Pop(k, pairs);
}

Pop Pop::qkj(int k, int j) {
    if (j < 1 || j > k) throw std::invalid_argument("Qkj wants 1 <= j <= k");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= k; ++i)
        if (i != j) pairs.emplace_back(j, i);
    return Pop(k, pairs);
}

Pop Pop::pk(int k) {
    if (k < 3) throw std::invalid_argument("Pk wants k >= 3");
    return Pop(k, {{1, 3}});
}

Pop Pop::rk(int k) {
    if (k < 2) throw std::invalid_argument("Rk wants k >= 2");
    return Pop(k, {{1, k}});
}

std::vector<Permutation> Pop::expand_patterns() const {
    std::vector<Permutation> out;
    for_each_permutation(k_, [&](const std::vector<int>& v) {
        for (int a = 1; a <= k_; ++a)
            for (int b = 1; b <= k_; ++b)
                if (greater(a, b)
                    && v[static_cast<std::size_t>(a - 1)] < v[static_cast<std::size_t>(b - 1)])
                    return;
        out.emplace_back(v);
    });
    return out;
}

std::string Pop::str() const {
    std::ostringstream out;
    out << "size=" << k_;
    for (int a = 1; a <= k_; ++a)
        for (int b = 1; b <= k_; ++b)
            if (greater(a, b)) out << "; " << a << '>' << b;
    return out.str();
}

namespace {

// Scans labels 1..k picking increasing positions; prunes on every comparable
// pair against already placed labels.
bool place_label(const Permutation& p, const Pop& pop, std::vector<int>& vals, int from) {
    const int k = pop.size();
    const int t = static_cast<int>(vals.size()); // labels 1..t placed
    if (t == k) return true;
    const int n = p.size();
    for (int pos = from; pos <= n - (k - t) + 1; ++pos) {
        const int v = p.at(pos);
        bool fits = true;
        for (int b = 1; b <= t && fits; ++b) {
            if (pop.greater(t + 1, b) && v < vals[static_cast<std::size_t>(b - 1)]) fits = false;
            if (pop.greater(b, t + 1) && v > vals[static_cast<std::size_t>(b - 1)]) fits = false;
        }
        if (!fits) continue;
        vals.push_back(v);
        if (place_label(p, pop, vals, pos + 1)) return true;
        vals.pop_back();
    }
    return false;
}

long long count_label(const Permutation& p, const Pop& pop, std::vector<int>& vals, int from) {
    const int k = pop.size();
    const int t = static_cast<int>(vals.size());
    if (t == k) return 1;
    long long total = 0;
    const int n = p.size();
    for (int pos = from; pos <= n - (k - t) + 1; ++pos) {
        const int v = p.at(pos);
        bool fits = true;
        for (int b = 1; b <= t && fits; ++b) {
            if (pop.greater(t + 1, b) && v < vals[static_cast<std::size_t>(b - 1)]) fits = false;
            if (pop.greater(b, t + 1) && v > vals[static_cast<std::size_t>(b - 1)]) fits = false;
        }
        if (!fits) continue;
        vals.push_back(v);
        total += count_label(p, pop, vals, pos + 1);
        vals.pop_back();
    }
    return total;
}

} // namespace

bool contains_pop(const Permutation& p, const Pop& pop) {
    if (pop.size() > p.size()) return false;
    std::vector<int> vals;
    vals.reserve(static_cast<std::size_t>(pop.size()));
    return place_label(p, pop, vals, 1);
}

long long count_pop_occurrences(const Permutation& p, const Pop& pop) {
    if (pop.size() > p.size()) return 0;
    std::vector<int> vals;
    vals.reserve(static_cast<std::size_t>(pop.size()));
    return count_label(p, pop, vals, 1);
}

} // namespace popav
