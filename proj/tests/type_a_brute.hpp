#pragma once

// Independent brute-force checks for linearly oriented A_m, shared by the
// unit tests and the acceptance suite.

#include <utility>
#include <vector>

#include "tube/type_a.hpp"

namespace brute {

using namespace tube::typea;

// Triangulations of the polygon with vertices 0..m+1, by brute force over
// subsets of m-1 pairwise non-crossing diagonals.
inline long count_triangulations(int m)
{
    std::vector<std::pair<int, int>> diagonals;
    for (int i = 0; i <= m + 1; ++i)
        for (int j = i + 2; j <= m + 1; ++j)
            if (!(i == 0 && j == m + 1))
                diagonals.emplace_back(i, j);
    const int want = m - 1;
    const int d = static_cast<int>(diagonals.size());
    auto cross = [](std::pair<int, int> p, std::pair<int, int> q) {
        return (p.first < q.first && q.first < p.second && p.second < q.second) ||
               (q.first < p.first && p.first < q.second && q.second < p.second);
    };
    long count = 0;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(pick.size()) == want) {
            ++count;
            return;
        }
        for (int k = from; k < d; ++k) {
            bool ok = true;
            for (int p : pick)
                ok = ok && !cross(diagonals[p], diagonals[k]);
            if (!ok)
                continue;
            pick.push_back(k);
            self(self, k + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return count;
}

// (T, F) is a torsion pair iff Hom(T,F) = 0, F = T^perp and T = ^perp F.
inline bool is_torsion_pair(int m, const ATorsionPair& tp)
{
    for (const auto& y : all_arcs(m)) {
        bool hom_from_t = false;
        bool hom_to_f = false;
        for (const auto& t : tp.torsion)
            hom_from_t = hom_from_t || a_hom_dim(t, y) != 0;
        for (const auto& f : tp.torsion_free)
            hom_to_f = hom_to_f || a_hom_dim(y, f) != 0;
        if (tp.torsion_free.contains(y) == hom_from_t)
            return false;
        if (tp.torsion.contains(y) == hom_to_f)
            return false;
    }
    return true;
}

}  // namespace brute
