#include "tube/torsion.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "tube/type_a.hpp"

namespace tube {

std::string to_string(PairKind k)
{
    return k == PairKind::Ray ? "ray" : "coray";
}

std::string to_string(RigidKind k)
{
    return k == RigidKind::Prufer ? "prufer" : "adic";
}

SubcatDesc::SubcatDesc(Rank rank, std::set<IndObj> finite, std::set<long> rays, std::set<long> corays)
    : rank_(rank), finite_(std::move(finite)), rays_(std::move(rays)), corays_(std::move(corays))
{
    for (const auto& x : finite_) {
        if (!x.is_finite())
            throw MalformedError("descriptor lists infinite object " + x.str() + " as finite");
        if (x.rank() != rank_)
            throw MalformedError("object " + x.str() + " has the wrong rank");
    }
    for (const auto* s : {&rays_, &corays_})
        for (long i : *s)
            if (i < 0 || i >= rank_.value())
                throw MalformedError("ray/coray index " + std::to_string(i) + " outside 0.." +
                                     std::to_string(rank_.value() - 1));
    canonicalize();
}

SubcatDesc SubcatDesc::everything(Rank rank)
{
    std::set<long> all;
    for (long i = 0; i < rank.value(); ++i)
        all.insert(i);
    return SubcatDesc(rank, {}, all, {});
}

void SubcatDesc::canonicalize()
{
    const auto n = static_cast<std::size_t>(rank_.value());
    if (rays_.size() == n || corays_.size() == n) {
        // Every object lies on its start ray and on its end coray.
        finite_.clear();
        corays_.clear();
        for (long i = 0; i < rank_.value(); ++i)
            rays_.insert(i);
        return;
    }
    for (auto it = finite_.begin(); it != finite_.end();) {
        if (rays_.count(it->start()) || corays_.count(rank_.residue(it->end())))
            it = finite_.erase(it);
        else
            ++it;
    }
}

bool SubcatDesc::contains(const IndObj& x) const
{
    if (!x.is_finite())
        return false;
    return rays_.count(x.start()) || corays_.count(rank_.residue(x.end())) || finite_.count(x);
}

bool SubcatDesc::is_everything() const
{
    return rays_.size() == static_cast<std::size_t>(rank_.value());
}

std::set<long> SubcatDesc::effective_rays() const
{
    return rays_;
}

std::set<long> SubcatDesc::effective_corays() const
{
    return is_everything() ? rays_ : corays_;
}

long SubcatDesc::max_finite_length() const
{
    long m = 0;
    for (const auto& x : finite_)
        m = std::max(m, x.length());
    return m;
}

std::vector<IndObj> SubcatDesc::members_up_to(long max_len) const
{
    std::vector<IndObj> out;
    for (const auto& x : finite_objects(rank_, max_len))
        if (contains(x))
            out.push_back(x);
    return out;
}

std::string SubcatDesc::str() const
{
    if (is_everything())
        return "{all}";
    std::ostringstream os;
    os << "{";
    const char* sep = "";
    for (const auto& x : finite_) {
        os << sep << x;
        sep = " ";
    }
    for (long i : rays_) {
        os << sep << "R" << i;
        sep = " ";
    }
    for (long j : corays_) {
        os << sep << "C" << j;
        sep = " ";
    }
    os << "}";
    return os.str();
}

MaxRigid make_max_rigid(Rank rank, std::vector<IndObj> summands)
{
    std::sort(summands.begin(), summands.end());
    summands.erase(std::unique(summands.begin(), summands.end()), summands.end());
    if (summands.size() != static_cast<std::size_t>(rank.value()))
        throw MalformedError("a maximal rigid object in rank " + std::to_string(rank.value()) + " has " +
                             std::to_string(rank.value()) + " distinct summands, got " +
                             std::to_string(summands.size()));
    bool prufer = false;
    bool adic = false;
    for (const auto& x : summands) {
        if (x.rank() != rank)
            throw MalformedError("summand " + x.str() + " has the wrong rank");
        prufer = prufer || x.is_prufer();
        adic = adic || x.is_adic();
    }
    if (prufer && adic)
        throw MalformedError("summands mix Prufer and adic objects");
    if (!prufer && !adic)
        throw MalformedError("a maximal rigid object needs a Prufer or an adic summand");
    if (!is_rigid(summands))
        throw MalformedError("summands are not rigid");
    return {std::move(summands), prufer ? RigidKind::Prufer : RigidKind::Adic};
}

long cutoff_length(const SubcatDesc& desc)
{
    return 2L * desc.rank().value() + desc.max_finite_length() + 2;
}

namespace {

// The middle terms of the non-split extensions 0 -> y -> E -> x -> 0, one
// per negative crossing of the lifts.
template <class F>
void for_each_extension_middle(const IndObj& x, const IndObj& y, F&& f)
{
    const Rank r = x.rank();
    const long n = r.value();
    const long i = x.start(), j = x.end();
    for (long m = (i + 1 - y.end()) / n - 1; y.end() + m * n < j; ++m) {
        const long ip = y.start() + m * n;
        const long jp = y.end() + m * n;
        if (!(ip < i && i < jp && jp < j))
            continue;
        f(IndObj::finite(r, ip, j));
        if (jp > i + 1)
            f(IndObj::finite(r, i, jp));
    }
}

SubcatDesc infer_descriptor(Rank rank, long cutoff, const std::function<bool(const IndObj&)>& pred)
{
    const long n = rank.value();
    const long top = 2 * cutoff;
    std::map<IndObj, bool> member;
    for (const auto& x : finite_objects(rank, top))
        member.emplace(x, pred(x));

    std::set<long> rays, corays;
    for (long i = 0; i < n; ++i) {
        bool ray = true, coray = true;
        for (long l = cutoff; l <= top; ++l) {
            ray = ray && member.at(IndObj::finite(rank, i, i + l + 1));
            coray = coray && member.at(IndObj::finite(rank, i - l - 1, i));
        }
        if (ray)
            rays.insert(i);
        if (coray)
            corays.insert(i);
    }
    std::set<IndObj> finite;
    for (const auto& [x, in] : member) {
        if (!in || rays.count(x.start()) || corays.count(rank.residue(x.end())))
            continue;
        if (x.length() >= cutoff)
            throw std::logic_error("membership not periodic below cutoff " + std::to_string(cutoff) + " at " +
                                   x.str());
        finite.insert(x);
    }
    return SubcatDesc(rank, std::move(finite), std::move(rays), std::move(corays));
}

}  // namespace

bool is_ext_closed(const SubcatDesc& desc)
{
    const auto members = desc.members_up_to(cutoff_length(desc));
    for (const auto& x : members)
        for (const auto& y : members) {
            bool ok = true;
            for_each_extension_middle(x, y, [&](const IndObj& e) { ok = ok && desc.contains(e); });
            if (!ok)
                return false;
        }
    return true;
}

bool is_quotient_closed(const SubcatDesc& desc)
{
    for (const auto& x : desc.members_up_to(cutoff_length(desc)))
        for (const auto& q : left_shortenings(x))
            if (!desc.contains(q))
                return false;
    return true;
}

bool is_sub_closed(const SubcatDesc& desc)
{
    for (const auto& x : desc.members_up_to(cutoff_length(desc)))
        for (const auto& s : right_shortenings(x))
            if (!desc.contains(s))
                return false;
    return true;
}

SubcatDesc right_perp(const SubcatDesc& desc, long cutoff)
{
    const Rank r = desc.rank();
    const auto members = desc.members_up_to(2 * cutoff + r.value());
    return infer_descriptor(r, cutoff, [&](const IndObj& y) {
        return std::all_of(members.begin(), members.end(),
                           [&](const IndObj& x) { return hom_dim(x, y).is_zero(); });
    });
}

SubcatDesc left_perp(const SubcatDesc& desc, long cutoff)
{
    const Rank r = desc.rank();
    const auto members = desc.members_up_to(2 * cutoff + r.value());
    return infer_descriptor(r, cutoff, [&](const IndObj& x) {
        return std::all_of(members.begin(), members.end(),
                           [&](const IndObj& y) { return hom_dim(x, y).is_zero(); });
    });
}

SubcatDesc right_perp(const SubcatDesc& desc)
{
    return right_perp(desc, cutoff_length(desc));
}

SubcatDesc left_perp(const SubcatDesc& desc)
{
    return left_perp(desc, cutoff_length(desc));
}

PairKind classify_kind(const TorsionPair& tp)
{
    const bool t_inf = tp.torsion.is_infinite_type();
    const bool f_inf = tp.torsion_free.is_infinite_type();
    if (t_inf && f_inf)
        throw MalformedError("torsion and torsion-free parts are both of infinite type");
    if (!t_inf && !f_inf)
        throw MalformedError("torsion and torsion-free parts are both of finite type");
    return t_inf ? PairKind::Coray : PairKind::Ray;
}

bool is_torsion_pair(const TorsionPair& tp)
{
    if (tp.torsion.rank() != tp.torsion_free.rank())
        throw MalformedError("torsion pair parts have different ranks");
    try {
        if (classify_kind(tp) != tp.kind)
            return false;
    } catch (const MalformedError&) {
        return false;
    }
    const long cutoff = std::max(cutoff_length(tp.torsion), cutoff_length(tp.torsion_free));
    const auto ts = tp.torsion.members_up_to(cutoff);
    const auto fs = tp.torsion_free.members_up_to(cutoff);
    for (const auto& t : ts)
        for (const auto& f : fs)
            if (!hom_dim(t, f).is_zero())
                return false;
    return left_perp(tp.torsion_free, cutoff) == tp.torsion && right_perp(tp.torsion, cutoff) == tp.torsion_free;
}

SubcatDesc reflect(const SubcatDesc& desc)
{
    const Rank r = desc.rank();
    std::set<IndObj> finite;
    for (const auto& x : desc.finite_objs())
        finite.insert(reflect(x));
    std::set<long> rays, corays;
    for (long i : desc.rays())
        corays.insert(r.residue(-i));
    for (long j : desc.corays())
        rays.insert(r.residue(-j));
    return SubcatDesc(r, std::move(finite), std::move(rays), std::move(corays));
}

TorsionPair reflect_pair(const TorsionPair& tp)
{
    return {reflect(tp.torsion_free), reflect(tp.torsion),
            tp.kind == PairKind::Ray ? PairKind::Coray : PairKind::Ray};
}

MaxRigid reflect(const MaxRigid& u)
{
    std::vector<IndObj> out;
    for (const auto& x : u.summands)
        out.push_back(reflect(x));
    std::sort(out.begin(), out.end());
    return {std::move(out), u.kind == RigidKind::Prufer ? RigidKind::Adic : RigidKind::Prufer};
}

namespace {

class TiltingCache {
public:
    const std::vector<typea::ArcSet>& get(int m)
    {
        auto it = cache_.find(m);
        if (it == cache_.end())
            it = cache_.emplace(m, typea::enumerate_tilting(m)).first;
        return it->second;
    }

private:
    std::map<int, std::vector<typea::ArcSet>> cache_;
};

std::vector<MaxRigid> prufer_type_with(Rank rank, const std::vector<long>& indices, TiltingCache& cache)
{
    const auto wings = wing_intersection(rank, indices);
    std::vector<const std::vector<typea::ArcSet>*> choices;
    for (const auto& w : wings)
        choices.push_back(&cache.get(static_cast<int>(w.width() - 1)));

    std::vector<MaxRigid> out;
    std::vector<IndObj> current;
    for (long i : indices)
        current.push_back(IndObj::prufer(rank, i));
    std::function<void(std::size_t)> pick = [&](std::size_t r) {
        if (r == wings.size()) {
            std::vector<IndObj> s = current;
            std::sort(s.begin(), s.end());
            out.push_back({std::move(s), RigidKind::Prufer});
            return;
        }
        for (const auto& tilting : *choices[r]) {
            const std::size_t mark = current.size();
            for (const auto& a : tilting)
                current.push_back(typea::embed_in_wing(rank, wings[r].start, a));
            pick(r + 1);
            current.erase(current.begin() + static_cast<long>(mark), current.end());
        }
    };
    pick(0);
    return out;
}

}  // namespace

std::vector<std::vector<long>> prufer_index_subsets(Rank rank)
{
    const int n = rank.value();
    std::vector<std::vector<long>> out;
    for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
        std::vector<long> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1UL << i))
                s.push_back(i);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MaxRigid> enumerate_prufer_type(Rank rank, const std::vector<long>& prufer_indices)
{
    TiltingCache cache;
    std::vector<long> sorted = prufer_indices;
    std::sort(sorted.begin(), sorted.end());
    return prufer_type_with(rank, sorted, cache);
}

std::vector<MaxRigid> enumerate_max_rigid(Rank rank)
{
    TiltingCache cache;
    std::vector<MaxRigid> out;
    for (const auto& subset : prufer_index_subsets(rank)) {
        auto part = prufer_type_with(rank, subset, cache);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    const std::size_t prufer_count = out.size();
    out.reserve(2 * prufer_count);
    for (std::size_t k = 0; k < prufer_count; ++k)
        out.push_back(reflect(out[k]));
    return out;
}

TorsionPair torsion_pair_of(const MaxRigid& u)
{
    const Rank r = u.rank();
    std::set<IndObj> gen, cogen;
    std::set<long> infinite;
    for (const auto& x : u.summands) {
        if (x.is_finite()) {
            for (const auto& q : left_shortenings(x))
                gen.insert(q);
            for (const auto& s : right_shortenings(x))
                cogen.insert(s);
        } else {
            infinite.insert(x.is_prufer() ? x.start() : x.end());
        }
    }
    if (u.kind == RigidKind::Prufer) {
        std::set<IndObj> shifted;
        for (const auto& x : gen)
            shifted.insert(tau_inv(x));
        return {SubcatDesc(r, std::move(shifted), {}, {}), SubcatDesc(r, std::move(cogen), infinite, {}),
                PairKind::Ray};
    }
    std::set<IndObj> shifted;
    for (const auto& x : cogen)
        shifted.insert(tau(x));
    return {SubcatDesc(r, std::move(gen), {}, infinite), SubcatDesc(r, std::move(shifted), {}, {}),
            PairKind::Coray};
}

MaxRigid max_rigid_of(const TorsionPair& tp)
{
    if (!is_torsion_pair(tp))
        throw MalformedError("input is not a torsion pair");
    const Rank r = tp.torsion.rank();
    const bool ray = tp.kind == PairKind::Ray;
    const SubcatDesc& side = ray ? tp.torsion_free : tp.torsion;

    std::vector<IndObj> candidates = side.members_up_to(cutoff_length(side));
    for (long i : ray ? side.effective_rays() : side.effective_corays())
        candidates.push_back(ray ? IndObj::prufer(r, i) : IndObj::adic(r, i));

    std::vector<IndObj> chosen;
    for (const auto& alpha : candidates) {
        const bool keep = std::all_of(candidates.begin(), candidates.end(), [&](const IndObj& beta) {
            return ray ? ext_dim(beta, alpha).is_zero() : ext_dim(alpha, beta).is_zero();
        });
        if (keep)
            chosen.push_back(alpha);
    }
    return make_max_rigid(r, std::move(chosen));
}

std::vector<TorsionPair> enumerate_torsion_pairs(Rank rank)
{
    std::vector<TorsionPair> out;
    for (const auto& u : enumerate_max_rigid(rank))
        out.push_back(torsion_pair_of(u));
    return out;
}

unsigned long long torsion_pair_count_formula(int n)
{
    if (n < 1)
        throw std::invalid_argument("rank must be at least 1");
    // binom(2n-1, n-1), exact at every step
    unsigned long long c = 1;
    for (int k = 1; k <= n - 1; ++k)
        c = c * static_cast<unsigned long long>(n + k) / static_cast<unsigned long long>(k);
    return 2 * c;
}

}  // namespace tube
