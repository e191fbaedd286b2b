#pragma once

// Linearly oriented A_m: arcs [i,j] over a segment with marked points
// 0..m+1, tilting modules as triangulations and their torsion pairs.

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tube/arc.hpp"

namespace tube::typea {

struct AArc {
    int m = 0;
    int i = 0;
    int j = 0;

    static AArc make(int m, int i, int j);
    int length() const { return j - i - 1; }
    std::string str() const;

    friend auto operator<=>(const AArc&, const AArc&) = default;
};

using ArcSet = std::set<AArc>;

struct ATorsionPair {
    ArcSet torsion;
    ArcSet torsion_free;
    friend bool operator==(const ATorsionPair&, const ATorsionPair&) = default;
};

std::vector<AArc> all_arcs(int m);

// 1 iff [i',j'] = y and x = [i,j] satisfy i' < i < j' < j.
int a_ext_dim(const AArc& x, const AArc& y);
// 1 iff i <= i' <= j-2 and i'+2 <= j <= j' (image is [i',j]).
int a_hom_dim(const AArc& x, const AArc& y);
// Middle term of the non-split extension of x by y.
std::vector<AArc> a_ses_middle(const AArc& x, const AArc& y);

std::optional<AArc> a_tau(const AArc& x);
std::optional<AArc> a_tau_inv(const AArc& x);

// All tilting sets, each containing [0,m+1], lexicographically sorted.
// m = 0 yields the single empty set.
std::vector<ArcSet> enumerate_tilting(int m);

ArcSet left_closure(const ArcSet& s);
ArcSet right_closure(const ArcSet& s);

// (Gen U, Cogen tau U)
ATorsionPair a_torsion_pair_of_tilting(const ArcSet& u);
// (Gen tau^-1 U, Cogen U)
ATorsionPair a_torsion_pair_of_tilting_dual(const ArcSet& u);

// Ext-projectives of a torsion class containing every injective [i,m+1].
ArcSet a_tilting_of_torsion_pair(const ArcSet& torsion);
// Ext-injectives of a torsion-free class containing every projective [0,j].
ArcSet a_tilting_of_torsionfree(const ArcSet& torsion_free);

bool a_is_oriented_ptolemy(const ArcSet& s);
bool a_is_torsion_class(const ArcSet& s);
bool a_is_torsionfree_class(const ArcSet& s);

// [p,q] in the wing starting at wing_start maps to M[wing_start+p, wing_start+q].
IndObj embed_in_wing(Rank rank, long wing_start, const AArc& a);

}  // namespace tube::typea
