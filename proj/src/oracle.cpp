#include "tube/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "tube/homcalc.hpp"

namespace tube::oracle {

namespace {

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint32_t p)
{
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p)
{
    return pow_mod(a, p - 2, p);
}

}  // namespace

std::size_t ModMatrix::rank_in_place(std::uint32_t p)
{
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows_ && at(pivot, c) == 0)
            ++pivot;
        if (pivot == rows_)
            continue;
        if (pivot != rank)
            for (std::size_t k = c; k < cols_; ++k)
                std::swap(at(pivot, k), at(rank, k));
        const std::uint64_t inv = inv_mod(at(rank, c), p);
        for (std::size_t k = c; k < cols_; ++k)
            at(rank, k) = static_cast<std::uint32_t>(at(rank, k) * inv % p);
        for (std::size_t r = rank + 1; r < rows_; ++r) {
            const std::uint64_t f = at(r, c);
            if (f == 0)
                continue;
            for (std::size_t k = c; k < cols_; ++k)
                at(r, k) = static_cast<std::uint32_t>((at(r, k) + (p - f) * at(rank, k)) % p);
        }
        ++rank;
    }
    return rank;
}

Quiver Quiver::cyclic(int n)
{
    Quiver q;
    q.vertices = n;
    for (int v = 0; v < n; ++v)
        q.arrows.emplace_back(v, (v - 1 + n) % n);
    return q;
}

Quiver Quiver::linear(int m)
{
    Quiver q;
    q.vertices = m;
    for (int v = 1; v < m; ++v)
        q.arrows.emplace_back(v, v - 1);
    return q;
}

int QuivRep::total_dim() const
{
    int s = 0;
    for (int d : dims)
        s += d;
    return s;
}

namespace {

// Uniserial module whose t-th basis vector sits at vertex_of(t) and arrows
// push b_t to b_{t-1}.
template <class VertexOf>
QuivRep uniserial(Quiver quiver, int length, VertexOf vertex_of)
{
    QuivRep rep{std::move(quiver), {}, {}};
    rep.dims.assign(static_cast<std::size_t>(rep.quiver.vertices), 0);
    std::vector<int> local(static_cast<std::size_t>(length));
    for (int t = 0; t < length; ++t)
        local[static_cast<std::size_t>(t)] = rep.dims[static_cast<std::size_t>(vertex_of(t))]++;
    for (const auto& [tail, head] : rep.quiver.arrows)
        rep.maps.emplace_back(static_cast<std::size_t>(rep.dims[static_cast<std::size_t>(head)]),
                              static_cast<std::size_t>(rep.dims[static_cast<std::size_t>(tail)]));
    for (int t = 1; t < length; ++t) {
        const int v = vertex_of(t);
        const int w = vertex_of(t - 1);
        for (std::size_t a = 0; a < rep.quiver.arrows.size(); ++a)
            if (rep.quiver.arrows[a] == std::pair{v, w}) {
                rep.maps[a].at(static_cast<std::size_t>(local[static_cast<std::size_t>(t - 1)]),
                               static_cast<std::size_t>(local[static_cast<std::size_t>(t)])) = 1;
                break;
            }
    }
    return rep;
}

}  // namespace

QuivRep build_rep(const IndObj& x)
{
    if (!x.is_finite())
        throw std::invalid_argument("only finite objects have matrix representations");
    const Rank r = x.rank();
    const long start = x.start();
    return uniserial(Quiver::cyclic(r.value()), static_cast<int>(x.length()),
                     [&](int t) { return static_cast<int>(r.residue(start + t)); });
}

QuivRep build_rep(const typea::AArc& a)
{
    return uniserial(Quiver::linear(a.m), a.length(), [&](int t) { return a.i + t; });
}

long euler_form(const Quiver& q, const std::vector<int>& d, const std::vector<int>& e)
{
    if (d.size() != static_cast<std::size_t>(q.vertices) || e.size() != d.size())
        throw std::invalid_argument("dimension vector size does not match the quiver");
    long s = 0;
    for (std::size_t v = 0; v < d.size(); ++v)
        s += static_cast<long>(d[v]) * e[v];
    for (const auto& [tail, head] : q.arrows)
        s -= static_cast<long>(d[static_cast<std::size_t>(tail)]) * e[static_cast<std::size_t>(head)];
    return s;
}

long hom_dim_oracle(const QuivRep& a, const QuivRep& b, std::uint32_t p)
{
    if (a.quiver.vertices != b.quiver.vertices || a.quiver.arrows != b.quiver.arrows)
        throw std::invalid_argument("representations of different quivers");
    const auto nv = static_cast<std::size_t>(a.quiver.vertices);

    // unknown f_v(r, c) for r < dim b_v, c < dim a_v
    std::vector<std::size_t> offset(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v)
        offset[v + 1] = offset[v] + static_cast<std::size_t>(a.dims[v] * b.dims[v]);
    const std::size_t unknowns = offset[nv];
    if (unknowns == 0)
        return 0;
    auto var = [&](std::size_t v, std::size_t r, std::size_t c) {
        return offset[v] + r * static_cast<std::size_t>(a.dims[v]) + c;
    };

    std::size_t equations = 0;
    for (const auto& [tail, head] : a.quiver.arrows)
        equations += static_cast<std::size_t>(b.dims[static_cast<std::size_t>(head)] *
                                              a.dims[static_cast<std::size_t>(tail)]);
    ModMatrix sys(std::max<std::size_t>(equations, 1), unknowns);

    // b_map * f_tail - f_head * a_map = 0
    std::size_t row = 0;
    for (std::size_t k = 0; k < a.quiver.arrows.size(); ++k) {
        const auto v = static_cast<std::size_t>(a.quiver.arrows[k].first);
        const auto w = static_cast<std::size_t>(a.quiver.arrows[k].second);
        const ModMatrix& am = a.maps[k];
        const ModMatrix& bm = b.maps[k];
        for (std::size_t r = 0; r < static_cast<std::size_t>(b.dims[w]); ++r)
            for (std::size_t c = 0; c < static_cast<std::size_t>(a.dims[v]); ++c, ++row) {
                for (std::size_t s = 0; s < static_cast<std::size_t>(b.dims[v]); ++s)
                    if (const auto e = bm.at(r, s))
                        sys.at(row, var(v, s, c)) = (sys.at(row, var(v, s, c)) + e) % p;
                for (std::size_t s = 0; s < static_cast<std::size_t>(a.dims[w]); ++s)
                    if (const auto e = am.at(s, c))
                        sys.at(row, var(w, r, s)) = (sys.at(row, var(w, r, s)) + (p - e % p)) % p;
            }
    }
    return static_cast<long>(unknowns - sys.rank_in_place(p));
}

long ext_dim_oracle(const QuivRep& a, const QuivRep& b, std::uint32_t p)
{
    const long ext = hom_dim_oracle(a, b, p) - euler_form(a.quiver, a.dims, b.dims);
    if (ext < 0)
        throw std::logic_error("negative Ext dimension from the Euler form");
    return ext;
}

namespace {

class CliqueSearch {
public:
    explicit CliqueSearch(std::vector<std::vector<bool>> adj) : adj_(std::move(adj)) {}

    std::vector<std::vector<std::size_t>> run()
    {
        std::vector<std::size_t> all(adj_.size());
        for (std::size_t k = 0; k < all.size(); ++k)
            all[k] = k;
        std::vector<std::size_t> r;
        expand(r, all, {});
        return std::move(found_);
    }

private:
    // Bron-Kerbosch with pivoting.
    void expand(std::vector<std::size_t>& r, std::vector<std::size_t> p, std::vector<std::size_t> x)
    {
        if (p.empty()) {
            if (x.empty())
                found_.push_back(r);
            return;
        }
        std::size_t pivot = p.front();
        std::size_t best = 0;
        for (const auto* set : {&p, &x})
            for (std::size_t u : *set) {
                std::size_t deg = 0;
                for (std::size_t v : p)
                    deg += adj_[u][v];
                if (deg >= best) {
                    best = deg;
                    pivot = u;
                }
            }
        const std::vector<std::size_t> snapshot = p;
        for (std::size_t v : snapshot) {
            if (adj_[pivot][v])
                continue;
            std::vector<std::size_t> np, nx;
            for (std::size_t u : p)
                if (adj_[v][u])
                    np.push_back(u);
            for (std::size_t u : x)
                if (adj_[v][u])
                    nx.push_back(u);
            r.push_back(v);
            expand(r, std::move(np), std::move(nx));
            r.pop_back();
            p.erase(std::find(p.begin(), p.end(), v));
            x.push_back(v);
        }
    }

    std::vector<std::vector<bool>> adj_;
    std::vector<std::vector<std::size_t>> found_;
};

}  // namespace

std::vector<std::vector<IndObj>> brute_force_max_rigid(Rank rank)
{
    std::vector<IndObj> nodes;
    std::vector<QuivRep> reps;
    // Length n objects are included and dropped by the self-extension test.
    for (const auto& x : finite_objects(rank, rank.value())) {
        QuivRep rep = build_rep(x);
        if (ext_dim_oracle(rep, rep) == 0) {
            nodes.push_back(x);
            reps.push_back(std::move(rep));
        }
    }
    const std::size_t finite_count = nodes.size();
    for (long i = 0; i < rank.value(); ++i)
        nodes.push_back(IndObj::prufer(rank, i));
    for (long j = 0; j < rank.value(); ++j)
        nodes.push_back(IndObj::adic(rank, j));

    auto ext_zero = [&](std::size_t a, std::size_t b) {
        if (a < finite_count && b < finite_count)
            return ext_dim_oracle(reps[a], reps[b]) == 0;
        return ext_dim(nodes[a], nodes[b]).is_zero();
    };
    std::vector<std::vector<bool>> adj(nodes.size(), std::vector<bool>(nodes.size(), false));
    for (std::size_t a = 0; a < nodes.size(); ++a)
        for (std::size_t b = a + 1; b < nodes.size(); ++b)
            adj[a][b] = adj[b][a] = ext_zero(a, b) && ext_zero(b, a);

    std::vector<std::vector<IndObj>> out;
    for (const auto& clique : CliqueSearch(std::move(adj)).run()) {
        std::vector<IndObj> c;
        for (std::size_t k : clique)
            c.push_back(nodes[k]);
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace tube::oracle
