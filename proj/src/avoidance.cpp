#include "popav/avoidance.hpp"

#include <algorithm>
#include <future>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "indecomposables.hpp"
#include "popav/errors.hpp"
#include "popav/structures.hpp"

namespace popav {

namespace {

// Lexicographic scan of S_n keeping the permutations satisfying pred. One
// task per first value; results concatenated in first-value order, so the
// output does not depend on the worker count.
template <class Pred>
std::vector<Permutation> filter_sn(int n, int cap, const Pred& pred) {
    if (n < 0) throw std::invalid_argument("length must be nonnegative");
    if (n > cap)
        throw ResourceLimitError("brute-force scan capped at n = " + std::to_string(cap));
    std::vector<Permutation> out;
    if (n == 0) {
        Permutation e;
        if (pred(e)) out.push_back(e);
        return out;
    }
    auto scan_first = [n, &pred](int v) {
        std::vector<Permutation> local;
        std::vector<int> rest;
        rest.reserve(static_cast<std::size_t>(n) - 1);
        for (int x = 1; x <= n; ++x)
            if (x != v) rest.push_back(x);
        std::vector<int> full(static_cast<std::size_t>(n));
        full[0] = v;
        do {
            std::copy(rest.begin(), rest.end(), full.begin() + 1);
            Permutation p(full);
            if (pred(p)) local.push_back(std::move(p));
        } while (std::next_permutation(rest.begin(), rest.end()));
        return local;
    };
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (hw <= 1 || n <= 4) {
        for (int v = 1; v <= n; ++v) {
            auto part = scan_first(v);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    std::vector<std::future<std::vector<Permutation>>> parts;
    parts.reserve(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v)
        parts.push_back(std::async(std::launch::async, scan_first, v));
    for (auto& f : parts) {
        auto part = f.get();
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

// All direct sums of indecomposable blocks drawn from ind(m), total length n.
template <class Ind>
std::vector<Permutation> free_sum_closure(int n, const Ind& ind) {
    if (n < 0) throw std::invalid_argument("length must be nonnegative");
    std::vector<Permutation> out;
    auto rec = [&](auto&& self, const Permutation& acc) -> void {
        if (acc.size() == n) {
            out.push_back(acc);
            return;
        }
        for (int m = 1; m <= n - acc.size(); ++m)
            for (const Permutation& b : ind(m)) self(self, direct_sum(acc, b));
    };
    rec(rec, Permutation());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> sorted_union(std::vector<std::vector<Permutation>> parts) {
    std::vector<Permutation> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<Permutation> brute_force_av(const std::vector<Permutation>& patterns, int n,
                                        int cap) {
    return filter_sn(n, cap, [&](const Permutation& p) { return avoids_all(p, patterns); });
}

std::vector<Permutation> brute_force_av(const Pop& pop, int n, int cap) {
    return filter_sn(n, cap, [&](const Permutation& p) { return avoids_pop(p, pop); });
}

const std::vector<Permutation>& p_basis() {
    static const std::vector<Permutation> basis = {
        Permutation::parse("2413"), Permutation::parse("2431"), Permutation::parse("4213"),
        Permutation::parse("3412"), Permutation::parse("3421"), Permutation::parse("4231"),
        Permutation::parse("4321"), Permutation::parse("4312")};
    return basis;
}

std::vector<Permutation> structured_av_lambda(int n) {
    return free_sum_closure(
        n, [](int m) -> const std::vector<Permutation>& {
            return detail::paired_indecomposables(m).lhs;
        });
}

std::vector<Permutation> structured_av_pbasis(int n) {
    return free_sum_closure(
        n, [](int m) -> const std::vector<Permutation>& {
            return detail::paired_indecomposables(m).rhs;
        });
}

std::vector<Permutation> structured_av_p3(int n) {
    static const std::vector<Permutation> empty;
    static const std::vector<Permutation> one = {Permutation::parse("1")};
    static const std::vector<Permutation> two = {Permutation::parse("21")};
    return free_sum_closure(n, [](int m) -> const std::vector<Permutation>& {
        return m == 1 ? one : m == 2 ? two : empty;
    });
}

std::vector<Permutation> P4Parts::all() const { return sorted_union({a, b, c, d}); }

P4Parts structured_av_p4_parts(int n) {
    if (n < 4) throw std::invalid_argument("the four-way partition needs n >= 4");
    P4Parts parts;
    for (const auto& s : structured_av_p4(n - 1))
        parts.a.push_back(direct_sum(Permutation::identity(1), s));
    for (const auto& s : structured_av_p4(n - 2))
        parts.b.push_back(direct_sum(Permutation::parse("21"), s));
    for (const auto& s : structured_av_p3(n - 1))
        parts.c.push_back(skew_sum(s, Permutation::identity(1)));
    for (const auto& s : structured_av_p3(n - 3))
        parts.d.push_back(inflate(Permutation::parse("3142"),
                                  {Permutation::identity(1), Permutation::identity(1), s,
                                   Permutation::identity(1)}));
    return parts;
}

std::vector<Permutation> structured_av_p4(int n) {
    if (n < 4) return all_permutations(n);
    return structured_av_p4_parts(n).all();
}

std::vector<Permutation> structured_av_r4(int n) {
    static const std::vector<std::vector<Permutation>> atoms_by_size = {
        {Permutation::parse("1")},
        {Permutation::parse("21")},
        {Permutation::parse("231"), Permutation::parse("312"), Permutation::parse("321")},
        {Permutation::parse("2413")}};
    static const std::vector<Permutation> empty;
    return free_sum_closure(n, [](int m) -> const std::vector<Permutation>& {
        return m >= 1 && m <= 4 ? atoms_by_size[static_cast<std::size_t>(m - 1)] : empty;
    });
}

std::vector<Permutation> structured_av_qk(int k, int n) {
    if (k < 1) throw std::invalid_argument("Qk wants k >= 1");
    if (n < 0) throw std::invalid_argument("length must be nonnegative");
    std::vector<Permutation> cur = {Permutation()};
    for (int m = 1; m <= n; ++m) {
        std::vector<Permutation> next;
        for (const auto& p : cur) {
            for (int pos = std::max(1, m - k + 2); pos <= m; ++pos) {
                std::vector<int> v = p.vals();
                v.insert(v.begin() + (pos - 1), m);
                next.emplace_back(std::move(v));
            }
        }
        cur = std::move(next);
    }
    std::sort(cur.begin(), cur.end());
    return cur;
}

FamilySpec parse_family(const std::string& name) {
    if (name == "lambda") return {Family::Lambda, 0};
    if (name == "P") return {Family::PBasis, 0};
    if (name == "P3") return {Family::P3, 0};
    if (name == "P4") return {Family::P4, 0};
    if (name == "R4") return {Family::R4, 0};
    if (name == "Sfrak") return {Family::Sfrak, 0};
    std::string arg;
    if (name.rfind("Qk:", 0) == 0) arg = name.substr(3);
    else if (name.size() >= 2 && name[0] == 'Q' && name.find_first_not_of("0123456789", 1) == std::string::npos)
        arg = name.substr(1);
    if (!arg.empty()) {
        int k = std::stoi(arg);
        if (k < 1 || k > 20) throw std::invalid_argument("Qk wants k in [1, 20]");
        return {Family::Qk, k};
    }
    throw std::invalid_argument("unknown family: " + name);
}

std::string family_name(const FamilySpec& spec) {
    switch (spec.fam) {
        case Family::Lambda: return "lambda";
        case Family::PBasis: return "P";
        case Family::P3: return "P3";
        case Family::P4: return "P4";
        case Family::R4: return "R4";
        case Family::Sfrak: return "Sfrak";
        case Family::Qk: return "Qk:" + std::to_string(spec.k);
    }
    throw std::logic_error("unreachable family");
}

bool family_has_pop(const FamilySpec& spec) {
    return spec.fam != Family::PBasis && spec.fam != Family::Sfrak;
}

Pop family_pop(const FamilySpec& spec) {
    switch (spec.fam) {
        case Family::Lambda: return Pop::lambda();
        case Family::P3: return Pop::pk(3);
        case Family::P4: return Pop::pk(4);
        case Family::R4: return Pop::rk(4);
        case Family::Qk: return Pop::qk(spec.k);
        default: throw std::invalid_argument("family has no single defining POP");
    }
}

std::vector<Permutation> structured_av(const FamilySpec& spec, int n) {
    switch (spec.fam) {
        case Family::Lambda: return structured_av_lambda(n);
        case Family::PBasis: return structured_av_pbasis(n);
        case Family::P3: return structured_av_p3(n);
        case Family::P4: return structured_av_p4(n);
        case Family::R4: return structured_av_r4(n);
        case Family::Sfrak: return gen_bounded_displacement(n);
        case Family::Qk: return structured_av_qk(spec.k, n);
    }
    throw std::logic_error("unreachable family");
}

std::vector<Permutation> brute_av(const FamilySpec& spec, int n, int cap) {
    if (spec.fam == Family::PBasis) return brute_force_av(p_basis(), n, cap);
    if (spec.fam == Family::Sfrak)
        return filter_sn(n, cap,
                         [](const Permutation& p) { return in_bounded_displacement(p); });
    return brute_force_av(family_pop(spec), n, cap);
}

BigInt count_av(const FamilySpec& spec, int n) {
    if (n < 0) throw std::invalid_argument("length must be nonnegative");
    static std::mutex mu;
    switch (spec.fam) {
        case Family::Lambda:
        case Family::PBasis: {
            std::lock_guard<std::mutex> lock(mu);
            static std::vector<BigInt> a = {1};
            auto s = [](int i) { return BigInt(i == 1 ? 1 : 2 * i - 3); };
            while (static_cast<int>(a.size()) <= n) {
                const int m = static_cast<int>(a.size());
                BigInt v = s(m);
                for (int i = 1; i < m; ++i) v += s(i) * a[static_cast<std::size_t>(m - i)];
                a.push_back(v);
            }
            return a[static_cast<std::size_t>(n)];
        }
        case Family::P3: return fibonacci(n + 1);
        case Family::P4: return n == 0 ? BigInt(1) : BigInt(n) * fibonacci(n);
        case Family::Qk: {
            const int k = spec.k;
            if (n < k) return factorial(n);
            return factorial(k - 1) * int_pow(BigInt(k - 1), n - k + 1);
        }
        case Family::R4:
        case Family::Sfrak: {
            std::lock_guard<std::mutex> lock(mu);
            static std::vector<BigInt> a = {1, 1, 2, 6};
            while (static_cast<int>(a.size()) <= n) {
                const std::size_t m = a.size();
                a.push_back(a[m - 1] + a[m - 2] + 3 * a[m - 3] + a[m - 4]);
            }
            return a[static_cast<std::size_t>(n)];
        }
    }
    throw std::logic_error("unreachable family");
}

} // namespace popav
