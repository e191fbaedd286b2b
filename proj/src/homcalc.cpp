#include "tube/homcalc.hpp"

#include <ostream>

namespace tube {

ExtDim ExtDim::fin(long d)
{
    if (d < 0)
        throw std::invalid_argument("dimension must be nonnegative");
    return ExtDim(d);
}

long ExtDim::value() const
{
    if (is_aleph0())
        throw std::logic_error("aleph0 has no finite value");
    return d_;
}

std::string ExtDim::str() const
{
    return is_aleph0() ? "aleph0" : std::to_string(d_);
}

std::ostream& operator<<(std::ostream& os, ExtDim d)
{
    return os << d.str();
}

namespace {

long floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

// Smallest and largest m with lo <= x + m*n <= hi (inclusive window).
struct ShiftRange {
    long first;
    long last;
};

ShiftRange shifts_in(long n, long x, long lo, long hi)
{
    return {floor_div(lo - x + n - 1, n), floor_div(hi - x, n)};
}

// |{m : i' + mn < i < j' + mn < j}|, A = M[i,j], B = M[i',j'].
long finite_neg(long n, long i, long j, long ip, long jp)
{
    long count = 0;
    const auto r = shifts_in(n, jp, i + 1, j - 1);
    for (long m = r.first; m <= r.last; ++m)
        if (ip + m * n < i)
            ++count;
    return count;
}

// |{k : a <= c + kn <= b-2 and b <= d + kn}|
long finite_hom(long n, long a, long b, long c, long d)
{
    long count = 0;
    const auto r = shifts_in(n, c, a, b - 2);
    for (long k = r.first; k <= r.last; ++k)
        if (b <= d + k * n)
            ++count;
    return count;
}

void check_same_rank(const IndObj& a, const IndObj& b)
{
    if (a.rank() != b.rank())
        throw std::invalid_argument("objects live in tubes of different rank");
}

}  // namespace

long count_shifts_between(Rank rank, long x, long lo, long hi)
{
    const auto r = shifts_in(rank.value(), x, lo + 1, hi - 1);
    return r.last >= r.first ? r.last - r.first + 1 : 0;
}

ExtDim neg_crossings(const IndObj& a, const IndObj& b)
{
    check_same_rank(a, b);
    const Rank r = a.rank();
    const long n = r.value();
    if (a.is_finite() && b.is_finite())
        return ExtDim::fin(finite_neg(n, a.start(), a.end(), b.start(), b.end()));
    if (a.is_prufer() && b.is_finite())
        return ExtDim::fin(count_shifts_between(r, a.start(), b.start(), b.end()));
    if (a.is_finite() && b.is_adic())
        return ExtDim::fin(count_shifts_between(r, b.end(), a.start(), a.end()));
    if (a.is_prufer() && b.is_adic())
        return ExtDim::aleph0();
    // finite/Prufer, adic/finite and the remaining infinite pairs
    return ExtDim::fin(0);
}

ExtDim pos_crossings(const IndObj& a, const IndObj& b)
{
    return neg_crossings(b, a);
}

ExtDim ext_dim(const IndObj& x, const IndObj& y)
{
    return neg_crossings(x, y);
}

ExtDim hom_dim(const IndObj& x, const IndObj& y)
{
    check_same_rank(x, y);
    const long n = x.rank().value();
    if (!x.is_finite() && !y.is_finite())
        throw Unsupported("Hom between two infinite objects (" + x.str() + ", " + y.str() +
                          ") is not computed");
    if (x.is_finite() && y.is_finite())
        return ExtDim::fin(finite_hom(n, x.start(), x.end(), y.start(), y.end()));
    if (x.is_finite() && y.is_prufer()) {
        const auto r = shifts_in(n, y.start(), x.start(), x.end() - 2);
        return ExtDim::fin(r.last >= r.first ? r.last - r.first + 1 : 0);
    }
    if (x.is_adic() && y.is_finite()) {
        const auto r = shifts_in(n, x.end(), y.start() + 2, y.end());
        return ExtDim::fin(r.last >= r.first ? r.last - r.first + 1 : 0);
    }
    // Prufer -> finite and finite -> adic vanish.
    return ExtDim::fin(0);
}

bool is_rigid(std::span<const IndObj> objs)
{
    for (const auto& x : objs)
        for (const auto& y : objs)
            if (!ext_dim(x, y).is_zero())
                return false;
    return true;
}

}  // namespace tube
