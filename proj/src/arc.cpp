#include "tube/arc.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tube {

namespace {

long floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

}  // namespace

Rank::Rank(int n) : n_(n)
{
    if (n < 1)
        throw std::invalid_argument("tube rank must be at least 1, got " + std::to_string(n));
}

long Rank::residue(long i) const
{
    return i - floor_div(i, n_) * n_;
}

IndObj IndObj::finite(Rank rank, long i, long j)
{
    if (j < i + 2)
        throw std::invalid_argument("finite arc [" + std::to_string(i) + "," + std::to_string(j) +
                                    "] needs end >= start + 2");
    const long k = floor_div(i, rank.value());
    return IndObj(rank.value(), ObjKind::Finite, i - k * rank.value(), j - k * rank.value());
}

IndObj IndObj::prufer(Rank rank, long i)
{
    return IndObj(rank.value(), ObjKind::Prufer, rank.residue(i), 0);
}

IndObj IndObj::adic(Rank rank, long j)
{
    return IndObj(rank.value(), ObjKind::Adic, 0, rank.residue(j));
}

long IndObj::start() const
{
    if (kind_ == ObjKind::Adic)
        throw std::logic_error("adic object has no finite start");
    return i_;
}

long IndObj::end() const
{
    if (kind_ == ObjKind::Prufer)
        throw std::logic_error("Prufer object has no finite end");
    return j_;
}

long IndObj::length() const
{
    if (kind_ != ObjKind::Finite)
        throw std::logic_error("infinite object has no finite length");
    return j_ - i_ - 1;
}

Lift IndObj::lift() const
{
    switch (kind_) {
    case ObjKind::Finite: return {i_, j_};
    case ObjKind::Prufer: return {i_, std::nullopt};
    case ObjKind::Adic: return {std::nullopt, j_};
    }
    return {};
}

std::string IndObj::str() const
{
    switch (kind_) {
    case ObjKind::Finite: return "M[" + std::to_string(i_) + "," + std::to_string(j_) + "]";
    case ObjKind::Prufer: return "M[" + std::to_string(i_) + ",inf]";
    case ObjKind::Adic: return "M[-inf," + std::to_string(j_) + "]";
    }
    return {};
}

std::ostream& operator<<(std::ostream& os, const IndObj& x)
{
    return os << x.str();
}

IndObj normalize(Rank rank, const Lift& lift)
{
    if (lift.start && lift.end)
        return IndObj::finite(rank, *lift.start, *lift.end);
    if (lift.start)
        return IndObj::prufer(rank, *lift.start);
    if (lift.end)
        return IndObj::adic(rank, *lift.end);
    throw std::invalid_argument("an arc cannot have both endpoints at infinity");
}

IndObj normalize(Rank rank, long i, long j)
{
    return IndObj::finite(rank, i, j);
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

long parse_index(std::string_view s, std::string_view whole)
{
    long v = 0;
    const char* first = s.data();
    if (!s.empty() && s.front() == '+')
        ++first;
    auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || first == s.data() + s.size())
        throw std::invalid_argument("bad index '" + std::string(s) + "' in " + std::string(whole));
    return v;
}

}  // namespace

IndObj parse_object(Rank rank, std::string_view text)
{
    const std::string_view s = trim(text);
    if (s.size() < 5 || s.substr(0, 2) != "M[" || s.back() != ']')
        throw std::invalid_argument("expected M[START,END], got '" + std::string(text) + "'");
    const std::string_view body = s.substr(2, s.size() - 3);
    const auto comma = body.find(',');
    if (comma == std::string_view::npos || body.find(',', comma + 1) != std::string_view::npos)
        throw std::invalid_argument("expected exactly one comma in '" + std::string(text) + "'");
    const std::string_view a = trim(body.substr(0, comma));
    const std::string_view b = trim(body.substr(comma + 1));

    Lift lift;
    if (a == "-inf")
        lift.start = std::nullopt;
    else
        lift.start = parse_index(a, s);
    if (b == "inf" || b == "+inf")
        lift.end = std::nullopt;
    else
        lift.end = parse_index(b, s);
    return normalize(rank, lift);
}

std::vector<IndObj> parse_object_list(Rank rank, std::string_view text)
{
    std::vector<IndObj> out;
    std::size_t pos = 0;
    while (true) {
        const auto open = text.find("M[", pos);
        if (open == std::string_view::npos)
            break;
        const auto close = text.find(']', open);
        if (close == std::string_view::npos)
            throw std::invalid_argument("unterminated object in '" + std::string(text) + "'");
        const std::string_view gap = trim(text.substr(pos, open - pos));
        if (!gap.empty() && gap != "," && gap != ";")
            throw std::invalid_argument("unexpected text '" + std::string(gap) + "' in object list");
        out.push_back(parse_object(rank, text.substr(open, close - open + 1)));
        pos = close + 1;
    }
    const std::string_view rest = trim(text.substr(std::min(pos, text.size())));
    if (!rest.empty() && rest != "," && rest != ";")
        throw std::invalid_argument("unexpected text '" + std::string(rest) + "' in object list");
    return out;
}

IndObj tau(const IndObj& x)
{
    const Rank r = x.rank();
    switch (x.kind()) {
    case ObjKind::Finite: return IndObj::finite(r, x.start() - 1, x.end() - 1);
    case ObjKind::Prufer: return IndObj::prufer(r, x.start() - 1);
    case ObjKind::Adic: return IndObj::adic(r, x.end() - 1);
    }
    return x;
}

IndObj tau_inv(const IndObj& x)
{
    const Rank r = x.rank();
    switch (x.kind()) {
    case ObjKind::Finite: return IndObj::finite(r, x.start() + 1, x.end() + 1);
    case ObjKind::Prufer: return IndObj::prufer(r, x.start() + 1);
    case ObjKind::Adic: return IndObj::adic(r, x.end() + 1);
    }
    return x;
}

// M[i,j] -> M[-j,-i]; +inf and -inf trade places.
IndObj reflect(const IndObj& x)
{
    const Rank r = x.rank();
    switch (x.kind()) {
    case ObjKind::Finite: return IndObj::finite(r, -x.end(), -x.start());
    case ObjKind::Prufer: return IndObj::adic(r, -x.start());
    case ObjKind::Adic: return IndObj::prufer(r, -x.end());
    }
    return x;
}

std::vector<IndObj> left_shortenings(const IndObj& x)
{
    if (!x.is_finite())
        throw std::invalid_argument("shortenings are defined for finite objects only");
    std::vector<IndObj> out;
    for (long s = x.start(); s <= x.end() - 2; ++s)
        out.push_back(IndObj::finite(x.rank(), s, x.end()));
    return out;
}

std::vector<IndObj> right_shortenings(const IndObj& x)
{
    if (!x.is_finite())
        throw std::invalid_argument("shortenings are defined for finite objects only");
    std::vector<IndObj> out;
    for (long e = x.end(); e >= x.start() + 2; --e)
        out.push_back(IndObj::finite(x.rank(), x.start(), e));
    return out;
}

std::vector<IndObj> wing_members(Rank rank, long i, long t)
{
    std::set<IndObj> members;
    for (long j = i; j <= i + t - 2; ++j)
        for (long e = j + 2; e <= i + t; ++e)
            members.insert(IndObj::finite(rank, j, e));
    return {members.begin(), members.end()};
}

std::vector<IndObj> wing_members(Rank rank, const Wing& w)
{
    return wing_members(rank, w.start, w.width());
}

bool in_wing(const Wing& w, const IndObj& x)
{
    if (!x.is_finite() || w.is_zero())
        return false;
    const Rank r = x.rank();
    // shift x so its start is the least lift >= w.start
    const long k = floor_div(w.start - x.start() + r.value() - 1, r.value());
    const long s = x.start() + k * r.value();
    const long e = x.end() + k * r.value();
    return s <= w.end - 2 && e <= w.end;
}

std::vector<Wing> wing_intersection(Rank rank, std::vector<long> prufer_indices)
{
    if (prufer_indices.empty())
        throw std::invalid_argument("wing_intersection needs at least one Prufer index");
    std::sort(prufer_indices.begin(), prufer_indices.end());
    for (std::size_t r = 0; r < prufer_indices.size(); ++r) {
        if (prufer_indices[r] < 0 || prufer_indices[r] >= rank.value())
            throw std::invalid_argument("Prufer index out of range 0..n-1");
        if (r > 0 && prufer_indices[r] == prufer_indices[r - 1])
            throw std::invalid_argument("Prufer indices must be distinct");
    }
    std::vector<Wing> wings;
    for (std::size_t r = 0; r < prufer_indices.size(); ++r) {
        const long next = r + 1 < prufer_indices.size() ? prufer_indices[r + 1]
                                                        : prufer_indices[0] + rank.value();
        wings.push_back({prufer_indices[r], next});
    }
    return wings;
}

std::vector<IndObj> ray_members(Rank rank, long i, long max_len)
{
    std::vector<IndObj> out;
    for (long t = 2; t <= max_len + 1; ++t)
        out.push_back(IndObj::finite(rank, i, i + t));
    return out;
}

std::vector<IndObj> coray_members(Rank rank, long j, long max_len)
{
    std::vector<IndObj> out;
    for (long u = 2; u <= max_len + 1; ++u)
        out.push_back(IndObj::finite(rank, j - u, j));
    return out;
}

std::vector<IndObj> finite_objects(Rank rank, long max_len)
{
    std::vector<IndObj> out;
    out.reserve(static_cast<std::size_t>(rank.value() * std::max(0L, max_len)));
    for (long l = 1; l <= max_len; ++l)
        for (long i = 0; i < rank.value(); ++i)
            out.push_back(IndObj::finite(rank, i, i + l + 1));
    return out;
}

}  // namespace tube
