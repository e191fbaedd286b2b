#pragma once

// Crossing numbers of arcs and Hom / Ext^1 dimensions between
// indecomposables of the completed tube.

#include <span>
#include <stdexcept>
#include <string>

#include "tube/arc.hpp"

namespace tube {

// A finite dimension or aleph_0. Only Ext^1(Prufer, adic) is infinite.
class ExtDim {
public:
    static ExtDim fin(long d);
    static ExtDim aleph0() { return ExtDim(-1); }

    bool is_aleph0() const { return d_ < 0; }
    bool is_zero() const { return d_ == 0; }
    long value() const;
    std::string str() const;

    friend bool operator==(ExtDim, ExtDim) = default;

private:
    explicit ExtDim(long d) : d_(d) {}
    long d_;
};

std::ostream& operator<<(std::ostream& os, ExtDim d);

// Hom between two infinite objects is outside what the calculus covers.
class Unsupported : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Number of m with lo < x + m*n < hi.
long count_shifts_between(Rank rank, long x, long lo, long hi);

ExtDim neg_crossings(const IndObj& a, const IndObj& b);
ExtDim pos_crossings(const IndObj& a, const IndObj& b);

ExtDim ext_dim(const IndObj& x, const IndObj& y);
// Throws Unsupported when both arguments are infinite.
ExtDim hom_dim(const IndObj& x, const IndObj& y);

bool is_rigid(std::span<const IndObj> objs);

}  // namespace tube
