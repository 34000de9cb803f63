#include "popav/bijections.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "indecomposables.hpp"
#include "popav/avoidance.hpp"
#include "popav/pop.hpp"

namespace popav {

namespace {

// Rewrites each maximal direct-sum component through the matched block lists.
// from/to select the two sides; components outside the source list are a
// domain violation.
Permutation rewrite_components(const Permutation& p, bool lhs_to_rhs) {
    Permutation out;
    for (const Permutation& c : detail::sum_components(p)) {
        const auto& pairing = detail::paired_indecomposables(c.size());
        const auto& from = lhs_to_rhs ? pairing.lhs : pairing.rhs;
        const auto& to = lhs_to_rhs ? pairing.rhs : pairing.lhs;
        const auto it = std::find(from.begin(), from.end(), c);
        if (it == from.end())
            throw std::domain_error("component " + c.str() + " outside the avoidance set");
        out = direct_sum(out, to[static_cast<std::size_t>(it - from.begin())]);
    }
    return out;
}

} // namespace

Permutation lambda_to_P(const Permutation& p) { return rewrite_components(p, true); }
Permutation P_to_lambda(const Permutation& p) { return rewrite_components(p, false); }

Permutation juggling_to_avQ(const JugglingSequence& s) {
    if (!is_ground_state_juggling(s))
        throw std::domain_error("not a valid ground-state sequence: " + s.str());
    const int n = s.period();
    std::vector<int> vals(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const int slot = s.throws[static_cast<std::size_t>(i - 1)] + i - s.balls;
        vals[static_cast<std::size_t>(slot - 1)] = i;
    }
    return Permutation(std::move(vals));
}

JugglingSequence avQ_to_juggling(const Permutation& p, int balls) {
    if (balls < 0 || balls > 30) throw std::invalid_argument("ball count must be in [0, 30]");
    if (!avoids_pop(p, Pop::qk(balls + 2)))
        throw std::domain_error(p.str() + " contains the defining fan");
    const int n = p.size();
    const Permutation pos = inverse(p);
    std::vector<int> throws(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const int t = pos.at(i) - i + balls;
        if (t < 0) throw std::domain_error(p.str() + " yields a negative throw");
        throws[static_cast<std::size_t>(i - 1)] = t;
    }
    return JugglingSequence(std::move(throws), balls);
}

namespace {

std::vector<int> shrub_rec(const std::vector<int>& vals) {
    const int n = static_cast<int>(vals.size());
    if (n == 1) return {};
    if (n == 2) return vals[0] == 1 ? std::vector<int>{1, 2, 3} : std::vector<int>{1, 3, 2};
    int pos = 0;
    for (int i = 0; i < n; ++i)
        if (vals[static_cast<std::size_t>(i)] == n) pos = i + 1;
    std::vector<int> tau;
    if (pos == n) tau = {1, 3, 2};
    else if (pos == n - 1) tau = {1, 2, 3};
    else if (pos == n - 2) tau = {2, 1, 3};
    else throw std::domain_error("top value sits before the last three slots");
    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(n) - 1);
    for (int v : vals)
        if (v != n) rest.push_back(v);
    const std::vector<int> sub = shrub_rec(rest);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(3 * (n - 1)));
    out.push_back(1);
    for (int t : tau) out.push_back(t + 1);
    for (std::size_t i = 1; i < sub.size(); ++i) out.push_back(sub[i] + 3);
    return out;
}

std::vector<int> shrub_inv_rec(const std::vector<int>& q) {
    if (q.empty()) return {1};
    const int len = static_cast<int>(q.size());
    if (len == 3) {
        if (q == std::vector<int>{1, 2, 3}) return {1, 2};
        if (q == std::vector<int>{1, 3, 2}) return {2, 1};
        throw std::domain_error("three-slot block is neither 123 nor 132");
    }
    if (q[0] != 1) throw std::domain_error("forest must start with 1");
    std::vector<int> tau = {q[1] - 1, q[2] - 1, q[3] - 1};
    for (int t : tau)
        if (t < 1 || t > 3) throw std::domain_error("slots 2-4 must hold values 2-4");
    std::vector<int> sub;
    sub.reserve(q.size() - 3);
    sub.push_back(1);
    for (std::size_t i = 4; i < q.size(); ++i) {
        if (q[i] < 5) throw std::domain_error("slots past 4 must hold values above 4");
        sub.push_back(q[i] - 3);
    }
    std::vector<int> rest = shrub_inv_rec(sub);
    const int n = static_cast<int>(rest.size()) + 1;
    int pos;
    if (tau == std::vector<int>{1, 3, 2}) pos = n;
    else if (tau == std::vector<int>{1, 2, 3}) pos = n - 1;
    else if (tau == std::vector<int>{2, 1, 3}) pos = n - 2;
    else throw std::domain_error("three-slot block has an unexpected shape");
    rest.insert(rest.begin() + (pos - 1), n);
    return rest;
}

} // namespace

Permutation avQ4_to_shrub(const Permutation& p) {
    if (p.empty()) throw std::domain_error("the map needs a nonempty permutation");
    if (!avoids_pop(p, Pop::qk(4)))
        throw std::domain_error(p.str() + " contains the defining fan");
    return Permutation(shrub_rec(p.vals()));
}

Permutation shrub_to_avQ4(const Permutation& p) {
    if (!is_shrub_forest(p)) throw std::domain_error(p.str() + " is not a conforming forest");
    return Permutation(shrub_inv_rec(p.vals()));
}

Permutation qkj_conjugate(const Permutation& p, int k, int j) {
    if (j < 1 || j > k) throw std::invalid_argument("want 1 <= j <= k");
    if (k > p.size()) throw std::domain_error("fan size exceeds the length");
    std::vector<int> v = p.vals();
    std::swap(v[0], v[static_cast<std::size_t>(j - 1)]);
    return Permutation(std::move(v));
}

namespace {

// Shared peel-and-rebuild walk for the two rebase directions. Values are
// removed from the top down; slots[t] records, for the stage holding t
// values, how the maximum is displaced from its home. Rebuilding bottom-up
// with the other family's slot layout yields the image.
std::vector<int> rebase_walk(const std::vector<int>& v, int k, int j, bool inverse) {
    const int n = static_cast<int>(v.size());
    std::vector<int> slots(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> cur = v;
    for (int t = n; t >= 1; --t) {
        const int idx = static_cast<int>(std::find(cur.begin(), cur.end(), t) - cur.begin());
        int s = 0;
        if (!inverse) {
            s = t - 1 - idx;  // elements after the maximum
            if (s > k - 2) throw std::domain_error("stage " + std::to_string(t) +
                                                   " contains the rooted fan");
        } else {
            const int pos = idx + 1;
            if (t - pos <= k - j - 1) s = t - pos;
            else if (pos <= j - 1) s = (k - j) + (pos - 1);
            else throw std::domain_error("stage " + std::to_string(t) +
                                         " contains the rerooted fan");
        }
        slots[static_cast<std::size_t>(t)] = s;
        cur.erase(cur.begin() + idx);
    }
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int t = 1; t <= n; ++t) {
        const int s = slots[static_cast<std::size_t>(t)];
        const int pos = inverse ? t - s : (s <= k - j - 1 ? t - s : s - (k - j) + 1);
        out.insert(out.begin() + (pos - 1), t);
    }
    return out;
}

}  // namespace

Permutation qkj_rebase(const Permutation& p, int k, int j) {
    if (k < 1 || j < 1 || j > k) throw std::invalid_argument("want 1 <= j <= k");
    return Permutation(rebase_walk(p.vals(), k, j, false));
}

Permutation qkj_rebase_inv(const Permutation& p, int k, int j) {
    if (k < 1 || j < 1 || j > k) throw std::invalid_argument("want 1 <= j <= k");
    return Permutation(rebase_walk(p.vals(), k, j, true));
}

Permutation comp_to_avP3(const Composition& c) {
    Permutation out;
    for (int part : c.parts)
        out = direct_sum(out, part == 1 ? Permutation::parse("1") : Permutation::parse("21"));
    return out;
}

Composition avP3_to_comp(const Permutation& p) {
    static const Permutation one = Permutation::parse("1");
    static const Permutation two = Permutation::parse("21");
    std::vector<int> parts;
    for (const Permutation& c : detail::sum_components(p)) {
        if (c == one) parts.push_back(1);
        else if (c == two) parts.push_back(2);
        else throw std::domain_error("component " + c.str() + " is neither 1 nor 21");
    }
    return Composition(std::move(parts));
}

Permutation marked_to_avP4(const MarkedComposition& m) {
    const int s = static_cast<int>(m.parts.size());
    if (m.mark == s - 1) {
        Composition prefix(std::vector<int>(m.parts.begin(), m.parts.end() - 2));
        const Permutation f = comp_to_avP3(prefix);
        if (m.parts[static_cast<std::size_t>(s - 1)] == 1)
            return skew_sum(f, Permutation::identity(1));
        return inflate(Permutation::parse("3142"),
                       {Permutation::identity(1), Permutation::identity(1), f,
                        Permutation::identity(1)});
    }
    MarkedComposition head(std::vector<int>(m.parts.begin(), m.parts.end() - 1), m.mark);
    const Permutation sub = marked_to_avP4(head);
    if (m.parts.back() == 1) return direct_sum(Permutation::identity(1), sub);
    return direct_sum(Permutation::parse("21"), sub);
}

MarkedComposition avP4_to_marked(const Permutation& p) {
    const int n = p.size();
    if (n == 0) throw std::domain_error("the empty permutation has no preimage");
    auto slice = [&](int i, int j) {
        std::vector<int> w;
        w.reserve(static_cast<std::size_t>(j - i + 1));
        for (int t = i; t <= j; ++t) w.push_back(p.at(t));
        return reduce(w);
    };
    if (n >= 2 && p.at(1) == 1) {
        MarkedComposition m = avP4_to_marked(slice(2, n));
        m.parts.push_back(1);
        return m;
    }
    if (n >= 3 && p.at(1) == 2 && p.at(2) == 1) {
        MarkedComposition m = avP4_to_marked(slice(3, n));
        m.parts.push_back(2);
        return m;
    }
    if (p.at(n) == 1) {
        Composition c = n == 1 ? Composition() : avP3_to_comp(slice(1, n - 1));
        std::vector<int> parts = c.parts;
        parts.push_back(1);
        parts.push_back(1);
        return MarkedComposition(std::move(parts), static_cast<int>(c.parts.size()) + 1);
    }
    if (n >= 3 && p.at(1) == 3 && p.at(2) == 1 && p.at(n) == 2) {
        Composition c = n == 3 ? Composition() : avP3_to_comp(slice(3, n - 1));
        std::vector<int> parts = c.parts;
        parts.push_back(2);
        parts.push_back(2);
        return MarkedComposition(std::move(parts), static_cast<int>(c.parts.size()) + 1);
    }
    throw std::domain_error(p.str() + " matches no decomposition shape");
}

namespace {

const std::vector<Permutation>& displacement_atoms() {
    static const std::vector<Permutation> atoms = {
        Permutation::parse("1"),   Permutation::parse("21"),  Permutation::parse("231"),
        Permutation::parse("312"), Permutation::parse("321"), Permutation::parse("3142")};
    return atoms;
}

const std::vector<Permutation>& r4_atoms() {
    static const std::vector<Permutation> atoms = {
        Permutation::parse("1"),   Permutation::parse("21"),  Permutation::parse("231"),
        Permutation::parse("312"), Permutation::parse("321"), Permutation::parse("2413")};
    return atoms;
}

// Shared shape of both directions: validate every component against the
// source atoms, swap the one size-4 atom for the other, reverse the summand
// order.
Permutation swap_and_reverse(const Permutation& p, const std::vector<Permutation>& from,
                             const std::vector<Permutation>& to) {
    std::vector<Permutation> comps = detail::sum_components(p);
    for (auto& c : comps) {
        const auto it = std::find(from.begin(), from.end(), c);
        if (it == from.end())
            throw std::domain_error("component " + c.str() + " is not an allowed block");
        c = to[static_cast<std::size_t>(it - from.begin())];
    }
    std::reverse(comps.begin(), comps.end());
    Permutation out;
    for (const auto& c : comps) out = direct_sum(out, c);
    return out;
}

} // namespace

Permutation avR4_to_bounded(const Permutation& p) {
    return swap_and_reverse(p, r4_atoms(), displacement_atoms());
}

Permutation bounded_to_avR4(const Permutation& p) {
    return swap_and_reverse(p, displacement_atoms(), r4_atoms());
}

namespace {

template <class D, class MapFn, class InvFn, class StrFn>
BijectionReport check_bijection(std::string name, int n, const std::vector<D>& domain,
                                const std::vector<Permutation>& codomain, const MapFn& map,
                                const InvFn& inv, const StrFn& dstr) {
    BijectionReport r;
    r.name = std::move(name);
    r.n = n;
    r.domain_size = domain.size();
    r.codomain_size = codomain.size();
    r.image_in_codomain = true;
    r.round_trip = true;
    constexpr std::size_t kMaxFailures = 8;
    auto fail = [&](const std::string& what) {
        if (r.failures.size() < kMaxFailures) r.failures.push_back(what);
        else if (r.failures.size() == kMaxFailures) r.failures.push_back("...");
    };
    const std::set<Permutation> codo(codomain.begin(), codomain.end());
    std::set<Permutation> image;
    for (const D& x : domain) {
        Permutation y;
        try {
            y = map(x);
        } catch (const std::exception& e) {
            r.image_in_codomain = false;
            fail("map(" + dstr(x) + ") raised: " + e.what());
            continue;
        }
        if (!codo.count(y)) {
            r.image_in_codomain = false;
            fail("map(" + dstr(x) + ") = " + y.str() + " lies outside the codomain");
        }
        image.insert(y);
        try {
            if (!(inv(y) == x)) {
                r.round_trip = false;
                fail("round trip broke at " + dstr(x));
            }
        } catch (const std::exception& e) {
            r.round_trip = false;
            fail("inverse(" + y.str() + ") raised: " + e.what());
        }
    }
    r.injective = image.size() == domain.size();
    for (const Permutation& y : codomain) {
        try {
            const D x = inv(y);
            if (!(map(x) == y)) {
                r.round_trip = false;
                fail("reverse round trip broke at " + y.str());
            }
        } catch (const std::exception& e) {
            r.round_trip = false;
            fail("inverse(" + y.str() + ") raised: " + e.what());
        }
    }
    r.surjective = r.image_in_codomain && image.size() == codomain.size();
    return r;
}

std::string perm_str(const Permutation& p) { return p.str(); }

} // namespace

BijectionReport verify_bijection(const std::string& name, int n, int balls, int k, int j) {
    if (name == "lambda_P") {
        return check_bijection(name, n, structured_av_lambda(n), brute_force_av(p_basis(), n),
                               lambda_to_P, P_to_lambda, perm_str);
    }
    if (name == "juggling") {
        if (balls < 0) throw std::invalid_argument("juggling verification needs a ball count");
        return check_bijection(
            name + "(b=" + std::to_string(balls) + ")", n, gen_ground_juggling(n, balls),
            brute_force_av(Pop::qk(balls + 2), n), juggling_to_avQ,
            [balls](const Permutation& q) { return avQ_to_juggling(q, balls); },
            [](const JugglingSequence& s) { return s.str(); });
    }
    if (name == "shrub") {
        if (n < 1) throw std::invalid_argument("shrub verification needs n >= 1");
        return check_bijection(name, n, structured_av_qk(4, n), gen_shrub_forests(n - 1),
                               avQ4_to_shrub, shrub_to_avQ4, perm_str);
    }
    if (name == "qkj") {
        if (k < 2 || j < 1 || j > k)
            throw std::invalid_argument("fan-rebase verification needs k and j");
        return check_bijection(
            name + "(k=" + std::to_string(k) + ",j=" + std::to_string(j) + ")", n,
            structured_av_qk(k, n), brute_force_av(Pop::qkj(k, j), n),
            [k, j](const Permutation& p) { return qkj_rebase(p, k, j); },
            [k, j](const Permutation& p) { return qkj_rebase_inv(p, k, j); }, perm_str);
    }
    if (name == "comp_P3") {
        return check_bijection(name, n, gen_compositions(n), brute_force_av(Pop::pk(3), n),
                               comp_to_avP3, avP3_to_comp,
                               [](const Composition& c) { return c.str(); });
    }
    if (name == "marked_P4") {
        return check_bijection(name, n, gen_marked_compositions(n + 1),
                               brute_force_av(Pop::pk(4), n), marked_to_avP4, avP4_to_marked,
                               [](const MarkedComposition& m) { return m.str(); });
    }
    if (name == "R4_Sfrak") {
        return check_bijection(name, n, structured_av_r4(n),
                               brute_av({Family::Sfrak, 0}, n), avR4_to_bounded,
                               bounded_to_avR4, perm_str);
    }
    throw std::invalid_argument("unknown bijection: " + name);
}

std::vector<BijectionReport> verify_all_bijections(int n) {
    std::vector<BijectionReport> reports;
    reports.push_back(verify_bijection("lambda_P", n));
    for (int b = 1; b <= 3; ++b) reports.push_back(verify_bijection("juggling", n, b));
    if (n >= 1) reports.push_back(verify_bijection("shrub", n));
    for (int k = 3; k <= 4; ++k)
        for (int j = 1; j <= std::min(k, n); ++j)
            reports.push_back(verify_bijection("qkj", n, -1, k, j));
    reports.push_back(verify_bijection("comp_P3", n));
    reports.push_back(verify_bijection("marked_P4", n));
    reports.push_back(verify_bijection("R4_Sfrak", n));
    return reports;
}

} // namespace popav
