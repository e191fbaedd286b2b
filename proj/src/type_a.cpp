#include "tube/type_a.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace tube::typea {

AArc AArc::make(int m, int i, int j)
{
    if (m < 0 || i < 0 || j > m + 1 || j < i + 2)
        throw std::invalid_argument("invalid arc [" + std::to_string(i) + "," + std::to_string(j) +
                                    "] for A_" + std::to_string(m));
    return {m, i, j};
}

std::string AArc::str() const
{
    return "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

std::vector<AArc> all_arcs(int m)
{
    std::vector<AArc> out;
    for (int i = 0; i <= m - 1; ++i)
        for (int j = i + 2; j <= m + 1; ++j)
            out.push_back({m, i, j});
    return out;
}

namespace {

void check_same(const AArc& x, const AArc& y)
{
    if (x.m != y.m)
        throw std::invalid_argument("arcs of A_" + std::to_string(x.m) + " and A_" +
                                    std::to_string(y.m) + " cannot be compared");
}

bool crosses_negatively(const AArc& x, const AArc& y)
{
    return y.i < x.i && x.i < y.j && y.j < x.j;
}

}  // namespace

int a_ext_dim(const AArc& x, const AArc& y)
{
    check_same(x, y);
    return crosses_negatively(x, y) ? 1 : 0;
}

int a_hom_dim(const AArc& x, const AArc& y)
{
    check_same(x, y);
    return (x.i <= y.i && y.i <= x.j - 2 && y.i + 2 <= x.j && x.j <= y.j) ? 1 : 0;
}

std::vector<AArc> a_ses_middle(const AArc& x, const AArc& y)
{
    if (a_ext_dim(x, y) == 0)
        throw std::invalid_argument("no non-split extension of " + x.str() + " by " + y.str());
    std::vector<AArc> mid{{x.m, y.i, x.j}};
    if (y.j > x.i + 1)
        mid.push_back({x.m, x.i, y.j});
    std::sort(mid.begin(), mid.end());
    return mid;
}

std::optional<AArc> a_tau(const AArc& x)
{
    if (x.i < 1)
        return std::nullopt;
    return AArc{x.m, x.i - 1, x.j - 1};
}

std::optional<AArc> a_tau_inv(const AArc& x)
{
    if (x.j > x.m)
        return std::nullopt;
    return AArc{x.m, x.i + 1, x.j + 1};
}

std::vector<ArcSet> enumerate_tilting(int m)
{
    if (m < 0)
        throw std::invalid_argument("A_m needs m >= 0");
    std::vector<ArcSet> out;
    if (m == 0) {
        out.emplace_back();
        return out;
    }
    const std::vector<AArc> arcs = all_arcs(m);
    const AArc top{m, 0, m + 1};

    // Rigid = no crossing at all (in either direction).
    auto compatible = [](const AArc& a, const AArc& b) {
        return !crosses_negatively(a, b) && !crosses_negatively(b, a);
    };

    std::vector<AArc> chosen{top};
    std::function<void(std::size_t)> extend = [&](std::size_t from) {
        if (static_cast<int>(chosen.size()) == m) {
            out.emplace_back(chosen.begin(), chosen.end());
            return;
        }
        for (std::size_t k = from; k < arcs.size(); ++k) {
            const AArc& a = arcs[k];
            if (a == top)
                continue;
            if (std::all_of(chosen.begin(), chosen.end(), [&](const AArc& c) { return compatible(a, c); })) {
                chosen.push_back(a);
                extend(k + 1);
                chosen.pop_back();
            }
        }
    };
    extend(0);
    std::sort(out.begin(), out.end());
    return out;
}

ArcSet left_closure(const ArcSet& s)
{
    ArcSet out;
    for (const auto& a : s)
        for (int i = a.i; i <= a.j - 2; ++i)
            out.insert({a.m, i, a.j});
    return out;
}

ArcSet right_closure(const ArcSet& s)
{
    ArcSet out;
    for (const auto& a : s)
        for (int j = a.i + 2; j <= a.j; ++j)
            out.insert({a.m, a.i, j});
    return out;
}

ATorsionPair a_torsion_pair_of_tilting(const ArcSet& u)
{
    ArcSet shifted;
    for (const auto& a : u)
        if (auto t = a_tau(a))
            shifted.insert(*t);
    return {left_closure(u), right_closure(shifted)};
}

ATorsionPair a_torsion_pair_of_tilting_dual(const ArcSet& u)
{
    ArcSet shifted;
    for (const auto& a : u)
        if (auto t = a_tau_inv(a))
            shifted.insert(*t);
    return {left_closure(shifted), right_closure(u)};
}

ArcSet a_tilting_of_torsion_pair(const ArcSet& torsion)
{
    if (!torsion.empty()) {
        const int m = torsion.begin()->m;
        for (int i = 0; i <= m - 1; ++i)
            if (!torsion.count({m, i, m + 1}))
                throw std::invalid_argument("torsion class misses injective [" + std::to_string(i) + "," +
                                            std::to_string(m + 1) + "]");
    }
    if (!a_is_torsion_class(torsion))
        throw std::invalid_argument("not a torsion class");
    ArcSet out;
    for (const auto& x : torsion)
        if (std::none_of(torsion.begin(), torsion.end(), [&](const AArc& t) { return crosses_negatively(x, t); }))
            out.insert(x);
    return out;
}

ArcSet a_tilting_of_torsionfree(const ArcSet& torsion_free)
{
    if (!torsion_free.empty()) {
        const int m = torsion_free.begin()->m;
        for (int j = 2; j <= m + 1; ++j)
            if (!torsion_free.count({m, 0, j}))
                throw std::invalid_argument("torsion-free class misses projective [0," + std::to_string(j) + "]");
    }
    if (!a_is_torsionfree_class(torsion_free))
        throw std::invalid_argument("not a torsion-free class");
    ArcSet out;
    for (const auto& x : torsion_free)
        if (std::none_of(torsion_free.begin(), torsion_free.end(),
                         [&](const AArc& f) { return crosses_negatively(f, x); }))
            out.insert(x);
    return out;
}

bool a_is_oriented_ptolemy(const ArcSet& s)
{
    for (const auto& x : s)
        for (const auto& y : s)
            if (crosses_negatively(x, y))
                for (const auto& mid : a_ses_middle(x, y))
                    if (!s.count(mid))
                        return false;
    return true;
}

bool a_is_torsion_class(const ArcSet& s)
{
    return a_is_oriented_ptolemy(s) && left_closure(s) == s;
}

bool a_is_torsionfree_class(const ArcSet& s)
{
    return a_is_oriented_ptolemy(s) && right_closure(s) == s;
}

IndObj embed_in_wing(Rank rank, long wing_start, const AArc& a)
{
    return IndObj::finite(rank, wing_start + a.i, wing_start + a.j);
}

}  // namespace tube::typea
