#pragma once

// Data-parallel sweeps used by the tests, the acceptance suite and the CLI.
// Every kernel has a serial path that is the reference; the OpenMP path must
// produce identical output in identical order.

#include <span>
#include <vector>

#include "tube/arc.hpp"
#include "tube/homcalc.hpp"
#include "tube/torsion.hpp"

namespace tube::kernels {

enum class Exec { Serial, Parallel };

// Row-major table t[a * size + b] = ext_dim(objs[a], objs[b]).
std::vector<ExtDim> ext_table(std::span<const IndObj> objs, Exec exec);
// Row-major table of hom_dim on finite objects.
std::vector<long> hom_table(std::span<const IndObj> objs, Exec exec);

// Same tables computed by the linear-algebra oracle (finite objects only).
std::vector<long> oracle_ext_table(std::span<const IndObj> objs, Exec exec);
std::vector<long> oracle_hom_table(std::span<const IndObj> objs, Exec exec);

std::vector<MaxRigid> enumerate_max_rigid(Rank rank, Exec exec);
std::vector<TorsionPair> torsion_pairs_of(std::span<const MaxRigid> us, Exec exec);
// 1 where is_torsion_pair holds.
std::vector<char> check_torsion_pairs(std::span<const TorsionPair> tps, Exec exec);

int max_threads();

}  // namespace tube::kernels
