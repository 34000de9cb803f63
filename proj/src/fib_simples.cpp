#include "popav/fib_simples.hpp"

#include <algorithm>
#include <stdexcept>

#include "popav/errors.hpp"

namespace popav {

const std::vector<Permutation>& fib_simple_patterns() {
    static const std::vector<Permutation> patterns = {
        Permutation::parse("2413"), Permutation::parse("3412"), Permutation::parse("3421")};
    return patterns;
}

std::vector<Permutation> brute_simple_avoiders(int n, int cap) {
    if (n < 0) throw std::invalid_argument("length must be nonnegative");
    if (n > cap)
        throw ResourceLimitError("simple-avoider scan capped at n = " + std::to_string(cap));
    std::vector<Permutation> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    for_each_permutation(n, [&](const std::vector<int>& v) {
        Permutation p(v);
        if (is_simple(p) && avoids_all(p, fib_simple_patterns())) out.push_back(std::move(p));
    });
    return out;
}

namespace {

void require_max_second_to_last(const Permutation& p) {
    const int m = p.size();
    if (m < 2 || p.at(m - 1) != m)
        throw std::domain_error("source must carry its maximum second to last");
}

} // namespace

Permutation f_a(const Permutation& p) {
    require_max_second_to_last(p);
    const int m = p.size();
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(m) + 2);
    v.push_back(m + 1);
    v.push_back(1);
    for (int i = 1; i <= m; ++i) v.push_back(p.at(i) + (i == m - 1 ? 2 : 1));
    return Permutation(std::move(v));
}

Permutation f_b(const Permutation& p) {
    require_max_second_to_last(p);
    const int m = p.size();
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(m) + 2);
    v.push_back(m + 1);
    for (int i = 1; i <= m - 1; ++i) v.push_back(p.at(i));
    v.push_back(m + 2);
    v.push_back(p.at(m));
    return Permutation(std::move(v));
}

Permutation f_c(const Permutation& p) {
    require_max_second_to_last(p);
    const int m = p.size();
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(m) + 1);
    v.push_back(p.at(1) + 1);
    v.push_back(1);
    for (int i = 2; i <= m; ++i) v.push_back(p.at(i) + 1);
    return Permutation(std::move(v));
}

Permutation g_a(const Permutation& p) {
    if (p.size() < 2) throw std::domain_error("too short to strip two entries");
    return reduce(std::vector<int>(p.vals().begin() + 2, p.vals().end()));
}

Permutation g_b(const Permutation& p) {
    const int n = p.size();
    if (n < 2) throw std::domain_error("too short to strip two entries");
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(n) - 2);
    for (int i = 2; i <= n; ++i)
        if (p.at(i) != n) v.push_back(p.at(i));
    return reduce(v);
}

Permutation g_c(const Permutation& p) {
    if (p.size() < 2) throw std::domain_error("too short to strip an entry");
    std::vector<int> v = p.vals();
    v.erase(v.begin() + 1);
    return reduce(v);
}

std::vector<Permutation> SimpleFamilies::all() const {
    std::vector<Permutation> out;
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    out.insert(out.end(), c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

SimpleFamilies simple_families(int n) {
    SimpleFamilies fams;
    if (n < 4) return fams;
    if (n == 4) {
        fams.b = {Permutation::parse("3142")};
        return fams;
    }
    if (n == 5) {
        fams.a = {Permutation::parse("41352")};
        return fams;
    }
    if (n == 6) {
        fams.a = {Permutation::parse("514263")};
        fams.b = {Permutation::parse("531462")};
        return fams;
    }
    if (n == 7) {
        fams.a = {Permutation::parse("6152473")};
        fams.b = {Permutation::parse("6413572")};
        fams.c = {Permutation::parse("6142573")};
        return fams;
    }
    const std::vector<Permutation> two_back = simple_families(n - 2).all();
    const SimpleFamilies one_back = simple_families(n - 1);
    for (const auto& p : two_back) {
        fams.a.push_back(f_a(p));
        fams.b.push_back(f_b(p));
    }
    for (const auto& p : one_back.b) fams.c.push_back(f_c(p));
    std::sort(fams.a.begin(), fams.a.end());
    std::sort(fams.b.begin(), fams.b.end());
    std::sort(fams.c.begin(), fams.c.end());
    return fams;
}

std::vector<Permutation> gen_simple_family(int n) {
    if (n < 0) throw std::invalid_argument("length must be nonnegative");
    if (n == 0) return {Permutation()};
    if (n == 1) return {Permutation::parse("1")};
    if (n == 2) return {Permutation::parse("12"), Permutation::parse("21")};
    if (n == 3) return {};
    return simple_families(n).all();
}

} // namespace popav
