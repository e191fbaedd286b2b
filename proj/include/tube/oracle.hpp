#pragma once

// Brute-force ground truth for the crossing calculus: explicit uniserial
// representations over a prime field, Hom as the dimension of the space of
// intertwiners, Ext^1 from the Euler form, and maximal rigid sets as maximal
// cliques of the Ext-compatibility graph.

#include <cstdint>
#include <utility>
#include <vector>

#include "tube/arc.hpp"
#include "tube/type_a.hpp"

namespace tube::oracle {

inline constexpr std::uint32_t kDefaultPrime = 32003;

// Dense matrix over F_p.
class ModMatrix {
public:
    ModMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    // Destroys the contents (row reduction in place).
    std::size_t rank_in_place(std::uint32_t p);

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint32_t> data_;
};

struct Quiver {
    int vertices = 0;
    std::vector<std::pair<int, int>> arrows;  // (tail, head)

    // Oriented n-cycle with arrows v -> v-1 (a loop when n = 1).
    static Quiver cyclic(int n);
    // 1 <- 2 <- ... <- m, vertices 0-based.
    static Quiver linear(int m);
};

struct QuivRep {
    Quiver quiver;
    std::vector<int> dims;
    // maps[a] is dims[head] x dims[tail]
    std::vector<ModMatrix> maps;

    int total_dim() const;
};

// Uniserial representation of a finite tube object: basis b_0..b_{l-1}
// with b_t at vertex (i+t) mod n, each arrow sending b_t to b_{t-1}.
QuivRep build_rep(const IndObj& x);
// M[i,j] of linear A_m, composition factors S_{i+1}..S_{j-1} from the socle.
QuivRep build_rep(const typea::AArc& a);

long euler_form(const Quiver& q, const std::vector<int>& d, const std::vector<int>& e);

long hom_dim_oracle(const QuivRep& a, const QuivRep& b, std::uint32_t p = kDefaultPrime);
// Throws std::logic_error if Hom - <dim a, dim b> comes out negative.
long ext_dim_oracle(const QuivRep& a, const QuivRep& b, std::uint32_t p = kDefaultPrime);

// Maximal cliques of the graph on {finite objects of length <= n-1} plus all
// Prufer and adic objects, edges where Ext^1 vanishes both ways. Each clique
// is sorted; the list is sorted.
std::vector<std::vector<IndObj>> brute_force_max_rigid(Rank rank);

}  // namespace tube::oracle
