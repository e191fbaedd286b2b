#pragma once

// Indecomposable objects of the completed tube of rank n, identified with
// oriented arcs on an annulus with n marked points.

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace tube {

class Rank {
public:
    explicit Rank(int n);
    int value() const { return n_; }
    // sigma^k
    long shift(long i, long k) const { return i + k * n_; }
    // representative of i modulo n in 0..n-1
    long residue(long i) const;

    friend bool operator==(Rank, Rank) = default;

private:
    int n_;
};

enum class ObjKind : std::uint8_t { Finite, Prufer, Adic };

// An arc [start, end] in the universal cover. An empty start is -inf, an
// empty end is +inf.
struct Lift {
    std::optional<long> start;
    std::optional<long> end;
};

// Finite M[i,j] (0 <= i < n, j >= i+2), Prufer M[i,inf] (0 <= i < n) or
// adic M[-inf,j] (0 <= j < n). Always stored normalized, so equality of
// objects is equality of fields.
class IndObj {
public:
    static IndObj finite(Rank rank, long i, long j);
    static IndObj prufer(Rank rank, long i);
    static IndObj adic(Rank rank, long j);

    Rank rank() const { return Rank(n_); }
    ObjKind kind() const { return kind_; }
    bool is_finite() const { return kind_ == ObjKind::Finite; }
    bool is_prufer() const { return kind_ == ObjKind::Prufer; }
    bool is_adic() const { return kind_ == ObjKind::Adic; }

    // Only meaningful for finite and Prufer objects.
    long start() const;
    // Only meaningful for finite and adic objects.
    long end() const;
    // Composition length l = j - i - 1 of a finite object.
    long length() const;
    Lift lift() const;

    std::string str() const;

    friend auto operator<=>(const IndObj&, const IndObj&) = default;
    friend bool operator==(const IndObj&, const IndObj&) = default;

private:
    IndObj(int n, ObjKind kind, long i, long j) : n_(n), kind_(kind), i_(i), j_(j) {}

    int n_;
    ObjKind kind_;
    long i_;
    long j_;
};

std::ostream& operator<<(std::ostream& os, const IndObj& x);

IndObj normalize(Rank rank, const Lift& lift);
IndObj normalize(Rank rank, long i, long j);

// Parse `M[i,j]`, `M[i,inf]` or `M[-inf,j]`; indices need not be normalized.
IndObj parse_object(Rank rank, std::string_view text);
// Every `M[...]` token in a list; separators between tokens are ignored.
std::vector<IndObj> parse_object_list(Rank rank, std::string_view text);

IndObj tau(const IndObj& x);
IndObj tau_inv(const IndObj& x);
IndObj reflect(const IndObj& x);

// Quotients (same end) and subobjects (same start) of a finite object,
// including the object itself, ordered by decreasing length.
std::vector<IndObj> left_shortenings(const IndObj& x);
std::vector<IndObj> right_shortenings(const IndObj& x);

struct Wing {
    long start = 0;
    long end = 0;

    long width() const { return end - start; }
    bool is_zero() const { return width() <= 1; }
    friend bool operator==(const Wing&, const Wing&) = default;
};

// Objects M[j,j+u] with u >= 2, i <= j <= i+t-2 and j+u <= i+t, sorted.
std::vector<IndObj> wing_members(Rank rank, long i, long t);
std::vector<IndObj> wing_members(Rank rank, const Wing& w);
bool in_wing(const Wing& w, const IndObj& x);

// The wings W[i_r, i_{r+1}] between cyclically consecutive Prufer indices;
// the last one wraps around by +n.
std::vector<Wing> wing_intersection(Rank rank, std::vector<long> prufer_indices);

std::vector<IndObj> ray_members(Rank rank, long i, long max_len);
std::vector<IndObj> coray_members(Rank rank, long j, long max_len);

// All finite objects of length 1..max_len, ordered by length then start.
std::vector<IndObj> finite_objects(Rank rank, long max_len);

}  // namespace tube
