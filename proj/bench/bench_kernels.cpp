// Serial reference vs OpenMP kernels: wall time and output equality.
//
//   bench_kernels [max_rank]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "tube/kernels.hpp"

using namespace tube;
using kernels::Exec;

namespace {

template <class F>
double seconds(F&& f)
{
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool all_equal = true;

template <class Run>
void compare(const std::string& name, Run&& run)
{
    decltype(run(Exec::Serial)) serial;
    decltype(run(Exec::Serial)) parallel;
    const double ts = seconds([&] { serial = run(Exec::Serial); });
    const double tp = seconds([&] { parallel = run(Exec::Parallel); });
    const bool same = serial == parallel;
    all_equal = all_equal && same;
    std::printf("%-28s serial %9.4fs  parallel %9.4fs  speedup %6.2f  %s\n", name.c_str(), ts, tp,
                tp > 0 ? ts / tp : 0.0, same ? "same" : "DIFFERENT");
}

}  // namespace

int main(int argc, char** argv)
{
    const int max_rank = argc > 1 ? std::atoi(argv[1]) : 7;
    std::printf("threads: %d\n", kernels::max_threads());
    for (int n = 2; n <= max_rank; ++n) {
        const Rank rank(n);
        const auto objs = finite_objects(rank, 3L * n);
        std::vector<IndObj> small = finite_objects(rank, 2L * n);
        compare("ext_table n=" + std::to_string(n), [&](Exec e) { return kernels::ext_table(objs, e); });
        compare("oracle_ext_table n=" + std::to_string(n),
                [&](Exec e) { return kernels::oracle_ext_table(small, e); });
        compare("enumerate_max_rigid n=" + std::to_string(n),
                [&](Exec e) { return kernels::enumerate_max_rigid(rank, e); });
        const auto us = kernels::enumerate_max_rigid(rank, Exec::Serial);
        const auto tps = kernels::torsion_pairs_of(us, Exec::Serial);
        compare("check_torsion_pairs n=" + std::to_string(n),
                [&](Exec e) { return kernels::check_torsion_pairs(tps, e); });
    }
    return all_equal ? 0 : 1;
}
