#include "tube/kernels.hpp"

#include <omp.h>

#include "tube/oracle.hpp"

namespace tube::kernels {

int max_threads()
{
    return omp_get_max_threads();
}

namespace {

// fill(k) for k in [0, count), either in order or split across threads.
template <class Fill>
void sweep(std::size_t count, Exec exec, Fill&& fill)
{
    const auto total = static_cast<long>(count);
    if (exec == Exec::Serial) {
        for (long k = 0; k < total; ++k)
            fill(static_cast<std::size_t>(k));
        return;
    }
#pragma omp parallel for schedule(dynamic, 16)
    for (long k = 0; k < total; ++k)
        fill(static_cast<std::size_t>(k));
}

}  // namespace

std::vector<ExtDim> ext_table(std::span<const IndObj> objs, Exec exec)
{
    const std::size_t size = objs.size();
    std::vector<ExtDim> t(size * size, ExtDim::fin(0));
    sweep(size * size, exec, [&](std::size_t k) { t[k] = ext_dim(objs[k / size], objs[k % size]); });
    return t;
}

std::vector<long> hom_table(std::span<const IndObj> objs, Exec exec)
{
    const std::size_t size = objs.size();
    std::vector<long> t(size * size, 0);
    sweep(size * size, exec, [&](std::size_t k) { t[k] = hom_dim(objs[k / size], objs[k % size]).value(); });
    return t;
}

namespace {

std::vector<oracle::QuivRep> reps_of(std::span<const IndObj> objs)
{
    std::vector<oracle::QuivRep> reps;
    reps.reserve(objs.size());
    for (const auto& x : objs)
        reps.push_back(oracle::build_rep(x));
    return reps;
}

}  // namespace

std::vector<long> oracle_ext_table(std::span<const IndObj> objs, Exec exec)
{
    const auto reps = reps_of(objs);
    const std::size_t size = objs.size();
    std::vector<long> t(size * size, 0);
    sweep(size * size, exec, [&](std::size_t k) { t[k] = oracle::ext_dim_oracle(reps[k / size], reps[k % size]); });
    return t;
}

std::vector<long> oracle_hom_table(std::span<const IndObj> objs, Exec exec)
{
    const auto reps = reps_of(objs);
    const std::size_t size = objs.size();
    std::vector<long> t(size * size, 0);
    sweep(size * size, exec, [&](std::size_t k) { t[k] = oracle::hom_dim_oracle(reps[k / size], reps[k % size]); });
    return t;
}

std::vector<MaxRigid> enumerate_max_rigid(Rank rank, Exec exec)
{
    if (exec == Exec::Serial)
        return tube::enumerate_max_rigid(rank);

    const auto subsets = prufer_index_subsets(rank);
    std::vector<std::vector<MaxRigid>> parts(subsets.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long k = 0; k < static_cast<long>(subsets.size()); ++k)
        parts[static_cast<std::size_t>(k)] = enumerate_prufer_type(rank, subsets[static_cast<std::size_t>(k)]);

    std::vector<MaxRigid> out;
    for (auto& p : parts)
        for (auto& u : p)
            out.push_back(std::move(u));
    const std::size_t prufer_count = out.size();
    out.reserve(2 * prufer_count);
    for (std::size_t k = 0; k < prufer_count; ++k)
        out.push_back(reflect(out[k]));
    return out;
}

std::vector<TorsionPair> torsion_pairs_of(std::span<const MaxRigid> us, Exec exec)
{
    std::vector<TorsionPair> out;
    if (us.empty())
        return out;
    out.assign(us.size(), torsion_pair_of(us.front()));
    sweep(us.size(), exec, [&](std::size_t k) { out[k] = torsion_pair_of(us[k]); });
    return out;
}

std::vector<char> check_torsion_pairs(std::span<const TorsionPair> tps, Exec exec)
{
    std::vector<char> ok(tps.size(), 0);
    sweep(tps.size(), exec, [&](std::size_t k) { ok[k] = is_torsion_pair(tps[k]) ? 1 : 0; });
    return ok;
}

}  // namespace tube::kernels
