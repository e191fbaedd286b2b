#pragma once

// Torsion pairs in the tube T_n and maximal rigid objects in its completion,
// with the bijection between them in both directions.
//
// A subcategory of T_n is described by finitely many finite objects plus
// whole rays R_i (fixed start i) and corays C_j (fixed end j). Membership of
// an object is decided exactly; anything that has to look at infinitely many
// members truncates at a cutoff length that is large enough for every
// condition involved to have become periodic.

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tube/arc.hpp"
#include "tube/homcalc.hpp"

namespace tube {

class MalformedError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SubcatDesc {
public:
    explicit SubcatDesc(Rank rank) : rank_(rank) {}
    SubcatDesc(Rank rank, std::set<IndObj> finite, std::set<long> rays, std::set<long> corays);

    static SubcatDesc everything(Rank rank);

    Rank rank() const { return rank_; }
    const std::set<IndObj>& finite_objs() const { return finite_; }
    const std::set<long>& rays() const { return rays_; }
    const std::set<long>& corays() const { return corays_; }

    bool contains(const IndObj& x) const;
    bool empty() const { return finite_.empty() && rays_.empty() && corays_.empty(); }
    bool is_everything() const;
    bool is_infinite_type() const { return !rays_.empty() || !corays_.empty(); }
    // Rays / corays actually contained, counting "everything" as all of them.
    std::set<long> effective_rays() const;
    std::set<long> effective_corays() const;
    long max_finite_length() const;

    // Finite members of length <= max_len, ordered by length then start.
    std::vector<IndObj> members_up_to(long max_len) const;

    std::string str() const;

    friend bool operator==(const SubcatDesc&, const SubcatDesc&) = default;

private:
    void canonicalize();

    Rank rank_;
    std::set<IndObj> finite_;
    std::set<long> rays_;
    std::set<long> corays_;
};

enum class PairKind { Ray, Coray };
enum class RigidKind { Prufer, Adic };

std::string to_string(PairKind k);
std::string to_string(RigidKind k);

struct TorsionPair {
    SubcatDesc torsion;
    SubcatDesc torsion_free;
    PairKind kind;
    friend bool operator==(const TorsionPair&, const TorsionPair&) = default;
};

struct MaxRigid {
    std::vector<IndObj> summands;  // sorted
    RigidKind kind;

    Rank rank() const { return summands.front().rank(); }
    friend bool operator==(const MaxRigid&, const MaxRigid&) = default;
};

// Validates the summands (count n, rigid, not mixing Prufer and adic) and
// returns a sorted MaxRigid. Throws MalformedError otherwise.
MaxRigid make_max_rigid(Rank rank, std::vector<IndObj> summands);

// Cutoff length beyond which membership questions about desc are periodic.
long cutoff_length(const SubcatDesc& desc);

bool is_ext_closed(const SubcatDesc& desc);
bool is_quotient_closed(const SubcatDesc& desc);
bool is_sub_closed(const SubcatDesc& desc);

// {Y : Hom(X,Y) = 0 for all X in desc} and {Y : Hom(Y,X) = 0 ...}.
SubcatDesc right_perp(const SubcatDesc& desc);
SubcatDesc left_perp(const SubcatDesc& desc);
SubcatDesc right_perp(const SubcatDesc& desc, long cutoff);
SubcatDesc left_perp(const SubcatDesc& desc, long cutoff);

PairKind classify_kind(const TorsionPair& tp);
bool is_torsion_pair(const TorsionPair& tp);

SubcatDesc reflect(const SubcatDesc& desc);
TorsionPair reflect_pair(const TorsionPair& tp);
MaxRigid reflect(const MaxRigid& u);

// Maximal rigid objects of Prufer type whose Prufer summands are exactly the
// given indices, in lexicographic order of the wing tilting choices.
std::vector<MaxRigid> enumerate_prufer_type(Rank rank, const std::vector<long>& prufer_indices);

// Nonempty subsets of {0..n-1}, each sorted, in lexicographic order.
std::vector<std::vector<long>> prufer_index_subsets(Rank rank);

// All maximal rigid objects: Prufer type first (index subsets in
// lexicographic order), then the reflections of those in the same order.
std::vector<MaxRigid> enumerate_max_rigid(Rank rank);

TorsionPair torsion_pair_of(const MaxRigid& u);
// Throws MalformedError when tp is not a torsion pair.
MaxRigid max_rigid_of(const TorsionPair& tp);

std::vector<TorsionPair> enumerate_torsion_pairs(Rank rank);

// 2 * binom(2n-1, n-1)
unsigned long long torsion_pair_count_formula(int n);

}  // namespace tube
