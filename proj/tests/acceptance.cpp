// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All comparisons are exact.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "golden_specs.hpp"
#include "type_a_brute.hpp"
#include "tube/kernels.hpp"
#include "tube/oracle.hpp"
#include "tube/render.hpp"
#include "tube/torsion.hpp"

using namespace tube;
using kernels::Exec;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_seconds, const std::function<void(Outcome&)>& body)
{
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_seconds > 0)
        o.require(dt < limit_seconds, "took " + std::to_string(dt) + " s");
    if (!o.ok)
        ++failures;
    std::printf("[%s] %2d %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, name.c_str(), dt, o.ok ? "" : ": ",
                o.detail.c_str());
    std::fflush(stdout);
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::pair<int, std::string> run_cli(const std::string& args)
{
    const std::string cmd = std::string(TUBECALC_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return {-1, ""};
    std::string out;
    char buf[4096];
    while (std::size_t k = std::fread(buf, 1, sizeof buf, pipe))
        out.append(buf, k);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// Every descriptor obtained from d by dropping one finite object, one ray or
// one coray.
std::vector<SubcatDesc> removals(const SubcatDesc& d)
{
    std::vector<SubcatDesc> out;
    const auto rays = d.effective_rays();
    const auto corays = d.is_everything() ? std::set<long>{} : d.corays();
    for (const auto& x : d.finite_objs()) {
        auto f = d.finite_objs();
        f.erase(x);
        out.emplace_back(d.rank(), f, rays, corays);
    }
    for (long i : rays) {
        auto r = rays;
        r.erase(i);
        out.emplace_back(d.rank(), d.finite_objs(), r, corays);
    }
    for (long j : corays) {
        auto c = corays;
        c.erase(j);
        out.emplace_back(d.rank(), d.finite_objs(), rays, c);
    }
    return out;
}

}  // namespace

int main()
{
    std::printf("threads: %d\n", kernels::max_threads());

    criterion(1, "torsion pair counts for n = 1..8", 10.0, [](Outcome& o) {
        const unsigned long long expected[] = {2, 6, 20, 70, 252, 924, 3432, 12870};
        for (int n = 1; n <= 8; ++n) {
            const auto count = kernels::enumerate_max_rigid(Rank(n), Exec::Parallel).size();
            o.require(count == expected[n - 1], "n=" + std::to_string(n) + " count " + std::to_string(count));
            o.require(torsion_pair_count_formula(n) == expected[n - 1], "formula at n=" + std::to_string(n));
        }
    });

    criterion(2, "crossing formula equals linear-algebra Ext, n <= 5, lengths <= 12", 60.0, [](Outcome& o) {
        for (int n = 1; n <= 5; ++n) {
            const auto objs = finite_objects(Rank(n), 12);
            const auto ours = kernels::ext_table(objs, Exec::Parallel);
            const auto theirs = kernels::oracle_ext_table(objs, Exec::Parallel);
            for (std::size_t k = 0; k < ours.size(); ++k)
                o.require(ours[k].value() == theirs[k],
                          "n=" + std::to_string(n) + " " + objs[k / objs.size()].str() + " " +
                              objs[k % objs.size()].str());
        }
    });

    criterion(3, "Auslander-Reiten duality hom(Y, tau X) = ext(X, Y)", 60.0, [](Outcome& o) {
        for (int n = 1; n <= 5; ++n) {
            const auto objs = finite_objects(Rank(n), 12);
            for (const auto& x : objs)
                for (const auto& y : objs)
                    o.require(hom_dim(y, tau(x)) == ext_dim(x, y), x.str() + " " + y.str());
        }
    });

    criterion(4, "bijection round trips, n <= 6", 60.0, [](Outcome& o) {
        for (int n = 1; n <= 6; ++n) {
            const auto us = kernels::enumerate_max_rigid(Rank(n), Exec::Parallel);
            const auto tps = kernels::torsion_pairs_of(us, Exec::Parallel);
            for (std::size_t k = 0; k < us.size(); ++k) {
                const MaxRigid back = max_rigid_of(tps[k]);
                o.require(back == us[k], "n=" + std::to_string(n) + " rigid #" + std::to_string(k));
                o.require(torsion_pair_of(back) == tps[k], "n=" + std::to_string(n) + " pair #" + std::to_string(k));
            }
            std::set<std::string> distinct;
            for (const auto& tp : tps)
                distinct.insert(tp.torsion.str() + "|" + tp.torsion_free.str());
            o.require(distinct.size() == tps.size(), "distinct pairs at n=" + std::to_string(n));
        }
    });

    criterion(5, "structured enumeration equals maximal clique search, n <= 5", 0, [](Outcome& o) {
        for (int n = 1; n <= 5; ++n) {
            std::vector<std::vector<IndObj>> ours;
            for (const auto& u : kernels::enumerate_max_rigid(Rank(n), Exec::Parallel))
                ours.push_back(u.summands);
            std::sort(ours.begin(), ours.end());
            const auto cliques = oracle::brute_force_max_rigid(Rank(n));
            o.require(ours == cliques, "n=" + std::to_string(n));
            for (const auto& c : cliques) {
                o.require(static_cast<int>(c.size()) == n, "clique size at n=" + std::to_string(n));
                const bool p = std::any_of(c.begin(), c.end(), [](const IndObj& x) { return x.is_prufer(); });
                const bool a = std::any_of(c.begin(), c.end(), [](const IndObj& x) { return x.is_adic(); });
                o.require(!(p && a), "clique mixes Prufer and adic at n=" + std::to_string(n));
            }
        }
    });

    criterion(6, "closure properties and minimality of torsion pairs, n <= 5", 0, [](Outcome& o) {
        for (int n = 1; n <= 5; ++n) {
            const auto us = kernels::enumerate_max_rigid(Rank(n), Exec::Parallel);
            const auto tps = kernels::torsion_pairs_of(us, Exec::Parallel);
            const auto ok = kernels::check_torsion_pairs(tps, Exec::Parallel);
            for (std::size_t k = 0; k < tps.size(); ++k) {
                const auto& tp = tps[k];
                const std::string at = "n=" + std::to_string(n) + " pair #" + std::to_string(k);
                o.require(ok[k] == 1, at + " is not a torsion pair");
                o.require(is_ext_closed(tp.torsion) && is_quotient_closed(tp.torsion), at + " torsion closure");
                o.require(is_ext_closed(tp.torsion_free) && is_sub_closed(tp.torsion_free), at + " free closure");
                for (const auto& t : removals(tp.torsion))
                    o.require(!is_torsion_pair({t, tp.torsion_free, tp.kind}), at + " survives a torsion removal");
                for (const auto& f : removals(tp.torsion_free))
                    o.require(!is_torsion_pair({tp.torsion, f, tp.kind}), at + " survives a free removal");
            }
        }
    });

    criterion(7, "reflection square, n <= 5", 0, [](Outcome& o) {
        for (int n = 1; n <= 5; ++n)
            for (const auto& u : kernels::enumerate_max_rigid(Rank(n), Exec::Parallel)) {
                const auto tp = torsion_pair_of(u);
                const auto rp = reflect_pair(tp);
                o.require(torsion_pair_of(reflect(u)) == rp, "square at n=" + std::to_string(n));
                o.require(rp.kind != tp.kind, "kind did not flip");
                o.require(reflect_pair(rp) == tp, "not an involution");
            }
    });

    criterion(8, "type A: Catalan counts, both torsion pair maps, recovery", 30.0, [](Outcome& o) {
        const long catalan[] = {1, 1, 2, 5, 14, 42, 132};
        for (int m = 1; m <= 6; ++m) {
            const auto ts = typea::enumerate_tilting(m);
            const std::string at = "m=" + std::to_string(m);
            o.require(static_cast<long>(ts.size()) == catalan[m], at + " tilting count");
            o.require(brute::count_triangulations(m) == catalan[m], at + " triangulation count");
            for (const auto& u : ts) {
                const auto tp = typea::a_torsion_pair_of_tilting(u);
                o.require(brute::is_torsion_pair(m, tp), at + " (Gen U, Cogen tau U)");
                for (int i = 0; i <= m - 1; ++i)
                    o.require(tp.torsion.contains(typea::AArc::make(m, i, m + 1)), at + " injective missing");
                o.require(typea::a_tilting_of_torsion_pair(tp.torsion) == u, at + " Ext-projectives");

                const auto dual = typea::a_torsion_pair_of_tilting_dual(u);
                o.require(brute::is_torsion_pair(m, dual), at + " (Gen tau^-1 U, Cogen U)");
                for (int j = 2; j <= m + 1; ++j)
                    o.require(dual.torsion_free.contains(typea::AArc::make(m, 0, j)), at + " projective missing");
                o.require(typea::a_tilting_of_torsionfree(dual.torsion_free) == u, at + " Ext-injectives");
            }
        }
    });

    criterion(9, "rank 14 example and the rank 10 wing decomposition", 0, [](Outcome& o) {
        const Rank r(14);
        const auto us = enumerate_prufer_type(r, {0, 6, 10, 13});
        o.require(us.size() == 420, "expected 420 maximal rigid objects, got " + std::to_string(us.size()));
        const std::vector<Wing> wings{{0, 7}, {6, 11}, {10, 14}, {13, 15}};
        for (const auto& u : us) {
            const auto tp = torsion_pair_of(u);
            o.require(tp.torsion_free.rays() == std::set<long>{0, 6, 10, 13}, "free part rays");
            o.require(!tp.torsion.is_infinite_type(), "torsion part has rays or corays");
            for (const auto& x : tp.torsion.finite_objs())
                o.require(std::any_of(wings.begin(), wings.end(), [&](const Wing& w) { return in_wing(w, x); }),
                          x.str() + " outside the wings");
        }
        const auto ws = wing_intersection(Rank(10), {0, 4, 7, 8});
        o.require(ws == std::vector<Wing>{{0, 4}, {4, 7}, {7, 8}, {8, 10}}, "rank 10 wings");
        o.require(!ws[0].is_zero() && !ws[1].is_zero() && ws[2].is_zero() && !ws[3].is_zero(), "zero wings");
    });

    criterion(10, "deterministic output and golden SVG files", 0, [](Outcome& o) {
        const std::vector<std::string> commands{
            "pairs enumerate --rank 4",
            "pairs enumerate --rank 4 --json",
            "pairs enumerate --rank 4 --parallel",
            "rigid enumerate --rank 4",
            "rigid enumerate --rank 4 --json --parallel",
            "render --mode annulus --rank 4 --objects 'M[0,inf] M[0,2] M[0,3] M[2,4]'",
            "render --mode cover --rank 3 --torsion 'M[0,2] M[1,3]' --free 'M[2,4]'",
            "render --mode segment --m 4 --arcs '[0,5] [0,3] [1,3] [3,5]'",
        };
        for (const auto& c : commands) {
            const auto a = run_cli(c);
            const auto b = run_cli(c);
            o.require(a.first == 0 && !a.second.empty(), "failed: " + c);
            o.require(a == b, "differs between runs: " + c);
        }
        o.require(run_cli("pairs enumerate --rank 5").second == run_cli("pairs enumerate --rank 5 --parallel").second,
                  "serial and parallel listings differ");
        for (const auto& [name, spec] : golden::specs())
            o.require(render_svg(spec) == slurp(std::string(TUBE_GOLDEN_DIR) + "/" + name), "golden " + name);
    });

    std::printf("%s: %d criteria failed\n", failures == 0 ? "OK" : "FAILED", failures);
    return failures == 0 ? 0 : 1;
}
