#include "tube/render.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace tube {

std::string to_string(RenderMode m)
{
    switch (m) {
    case RenderMode::Annulus: return "annulus";
    case RenderMode::Cover: return "cover";
    case RenderMode::Segment: return "segment";
    }
    return "";
}

std::string to_string(ArcStyle s)
{
    switch (s) {
    case ArcStyle::Summand: return "summand";
    case ArcStyle::Torsion: return "torsion";
    case ArcStyle::Free: return "free";
    case ArcStyle::Prufer: return "prufer";
    case ArcStyle::Adic: return "adic";
    }
    return "";
}

RenderMode parse_render_mode(const std::string& s)
{
    for (auto m : {RenderMode::Annulus, RenderMode::Cover, RenderMode::Segment})
        if (to_string(m) == s)
            return m;
    throw std::invalid_argument("unknown render mode '" + s + "'");
}

ArcStyle parse_arc_style(const std::string& s)
{
    for (auto st : {ArcStyle::Summand, ArcStyle::Torsion, ArcStyle::Free, ArcStyle::Prufer, ArcStyle::Adic})
        if (to_string(st) == s)
            return st;
    throw std::invalid_argument("unknown arc style '" + s + "'");
}

ArcStyle default_style(const IndObj& x, ArcStyle finite_style)
{
    if (x.is_prufer())
        return ArcStyle::Prufer;
    if (x.is_adic())
        return ArcStyle::Adic;
    return finite_style;
}

RenderSpec spec_of(const MaxRigid& u)
{
    RenderSpec spec;
    spec.mode = RenderMode::Annulus;
    spec.size = u.rank().value();
    for (const auto& x : u.summands)
        spec.objs.push_back({x, default_style(x)});
    return spec;
}

RenderSpec spec_of(const TorsionPair& tp, RenderMode mode, long max_len)
{
    if (mode == RenderMode::Segment)
        throw std::invalid_argument("torsion pairs are drawn on the annulus or the cover");
    RenderSpec spec;
    spec.mode = mode;
    spec.size = tp.torsion.rank().value();
    for (const auto& x : tp.torsion.members_up_to(max_len))
        spec.objs.push_back({x, ArcStyle::Torsion});
    for (const auto& x : tp.torsion_free.members_up_to(max_len))
        spec.objs.push_back({x, ArcStyle::Free});
    return spec;
}

namespace {

constexpr double kPi = std::numbers::pi;

struct Pt {
    double x;
    double y;
};

// Fixed three decimals computed in integer arithmetic, never "-0.000".
std::string num(double v)
{
    long long q = std::llround(v * 1000.0);
    std::string sign = q < 0 ? "-" : "";
    if (q < 0)
        q = -q;
    std::string frac = std::to_string(q % 1000);
    frac.insert(0, 3 - frac.size(), '0');
    return sign + std::to_string(q / 1000) + "." + frac;
}

std::string pt(Pt p)
{
    return num(p.x) + " " + num(p.y);
}

std::string polyline_path(const std::vector<Pt>& pts)
{
    std::string d = "M " + pt(pts.front());
    for (std::size_t k = 1; k < pts.size(); ++k)
        d += " L " + pt(pts[k]);
    return d;
}

// Triangle with its tip at `tip`, pointing along from -> tip.
std::string arrowhead(Pt from, Pt tip, const std::string& cls)
{
    double dx = tip.x - from.x;
    double dy = tip.y - from.y;
    const double len = std::hypot(dx, dy);
    dx /= len;
    dy /= len;
    const double s = 8.0;
    const Pt a{tip.x - s * dx + 0.5 * s * dy, tip.y - s * dy - 0.5 * s * dx};
    const Pt b{tip.x - s * dx - 0.5 * s * dy, tip.y - s * dy + 0.5 * s * dx};
    return "<polygon class=\"head " + cls + "\" points=\"" + num(tip.x) + "," + num(tip.y) + " " + num(a.x) + "," +
           num(a.y) + " " + num(b.x) + "," + num(b.y) + "\"/>\n";
}

std::string path(const std::string& cls, const std::string& d, const std::string& label)
{
    return "<path class=\"" + cls + "\" d=\"" + d + "\"><title>" + label + "</title></path>\n";
}

std::string header(double w, double h)
{
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(w) << "\" height=\"" << num(h)
       << "\" viewBox=\"0 0 " << num(w) << " " << num(h) << "\">\n"
       << "<style>\n"
       << "path { fill: none; stroke-width: 1.5; }\n"
       << ".summand { stroke: #000000; fill: #000000; }\n"
       << ".torsion { stroke: #1f4e9c; fill: #1f4e9c; }\n"
       << ".free { stroke: #b22222; fill: #b22222; }\n"
       << ".prufer { stroke: #1b7a3a; fill: #1b7a3a; }\n"
       << ".adic { stroke: #7a1b7a; fill: #7a1b7a; }\n"
       << "path.summand, path.torsion, path.free, path.prufer, path.adic { fill: none; }\n"
       << ".boundary { fill: none; stroke: #000000; stroke-width: 1; }\n"
       << ".hole { fill: #dddddd; stroke: #000000; stroke-width: 1; }\n"
       << ".point { fill: #000000; }\n"
       << ".label { font-family: sans-serif; font-size: 11px; text-anchor: middle; }\n"
       << "</style>\n";
    return os.str();
}

std::string point_and_label(Pt p, Pt label_at, long k)
{
    return "<circle class=\"point\" cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) + "\" r=\"3.000\"/>\n" +
           "<text class=\"label\" x=\"" + num(label_at.x) + "\" y=\"" + num(label_at.y + 4.0) + "\">" +
           std::to_string(k) + "</text>\n";
}

std::vector<StyledObj> sorted_objs(const RenderSpec& spec)
{
    std::vector<StyledObj> objs = spec.objs;
    for (const auto& s : objs)
        if (s.obj.rank().value() != spec.size)
            throw std::invalid_argument("object " + s.obj.str() + " does not belong to rank " +
                                        std::to_string(spec.size));
    auto key = [](const StyledObj& s) { return std::tie(s.style, s.obj); };
    std::sort(objs.begin(), objs.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
    objs.erase(std::unique(objs.begin(), objs.end(),
                           [&](const auto& a, const auto& b) { return key(a) == key(b); }),
               objs.end());
    return objs;
}

std::string render_annulus(const RenderSpec& spec)
{
    const int n = spec.size;
    const double c = 220.0;
    const double outer = 180.0;
    const double inner = 50.0;
    const double depth = outer - inner - 12.0;
    auto at = [&](double angle, double radius) { return Pt{c + radius * std::cos(angle), c - radius * std::sin(angle)}; };
    auto angle_of = [&](double k) { return 2.0 * kPi * k / n; };

    std::string out = header(2 * c, 2 * c);
    out += "<circle class=\"boundary\" cx=\"" + num(c) + "\" cy=\"" + num(c) + "\" r=\"" + num(outer) + "\"/>\n";
    out += "<circle class=\"hole\" cx=\"" + num(c) + "\" cy=\"" + num(c) + "\" r=\"" + num(inner) + "\"/>\n";
    for (long k = 0; k < n; ++k)
        out += point_and_label(at(angle_of(k), outer), at(angle_of(k), outer + 16.0), k);

    for (const auto& [x, style] : sorted_objs(spec)) {
        const std::string cls = to_string(style);
        std::vector<Pt> pts;
        if (x.is_finite()) {
            const double w = static_cast<double>(x.end() - x.start());
            const double d = depth * w / (w + n);
            const int samples = std::clamp(static_cast<int>(16 * w), 16, 480);
            for (int s = 0; s <= samples; ++s) {
                const double t = static_cast<double>(s) / samples;
                pts.push_back(at(angle_of(x.start() + t * w), outer - d * std::sin(kPi * t)));
            }
            out += path("arc " + cls, polyline_path(pts), x.str());
            continue;
        }
        // 2.5 turns from the boundary point inwards, truncated at the hole.
        const int samples = 300;
        for (int s = 0; s <= samples; ++s) {
            const double t = static_cast<double>(s) / samples;
            const double radius = outer - (depth + 2.0) * (1.0 - (1.0 - t) * (1.0 - t));
            if (x.is_prufer())
                pts.push_back(at(angle_of(x.start()) + 2.5 * 2.0 * kPi * t, radius));
            else
                pts.push_back(at(angle_of(x.end()) - 2.5 * 2.0 * kPi * t, radius));
        }
        out += path("spiral " + cls, polyline_path(pts), x.str());
        out += arrowhead(pts[pts.size() - 2], pts.back(), cls);
    }
    out += "</svg>\n";
    return out;
}

std::string render_cover(const RenderSpec& spec)
{
    const long n = spec.size;
    const double margin = 30.0;
    const double dx = 40.0;
    const double base = 40.0 + 1.5 * n * dx;
    const double width = 2 * margin + 3 * n * dx;
    const double left = margin;
    const double right = margin + 3 * n * dx;
    auto xpos = [&](long k) { return margin + static_cast<double>(k + n) * dx; };

    std::string out = header(width, base + 30.0);
    out += "<path class=\"boundary\" d=\"M " + pt({left, base}) + " L " + pt({right, base}) + "\"/>\n";
    for (long k = -n; k <= 2 * n; ++k)
        out += point_and_label({xpos(k), base}, {xpos(k), base + 16.0}, k);

    for (const auto& [x, style] : sorted_objs(spec)) {
        const std::string cls = to_string(style);
        for (long s = -3; s <= 3; ++s) {
            const long shift = s * n;
            if (x.is_finite()) {
                const long a = x.start() + shift;
                const long b = x.end() + shift;
                if (a < -n || b > 2 * n)
                    continue;
                const double r = (xpos(b) - xpos(a)) / 2.0;
                out += path("arc " + cls,
                            "M " + pt({xpos(a), base}) + " A " + num(r) + " " + num(r) + " 0 0 1 " + pt({xpos(b), base}),
                            x.str());
            } else if (x.is_prufer()) {
                const long a = x.start() + shift;
                if (a < -n || a >= 2 * n)
                    continue;
                const double h = std::min(base - 20.0, 0.5 * (right - xpos(a)) + 10.0);
                const Pt end{right, base - h};
                out += path("ray " + cls,
                            "M " + pt({xpos(a), base}) + " C " + pt({xpos(a), base - h}) + " " +
                                pt({xpos(a), base - h}) + " " + pt(end),
                            x.str());
                out += arrowhead({right - 10.0, base - h}, end, cls);
            } else {
                const long b = x.end() + shift;
                if (b <= -n || b > 2 * n)
                    continue;
                const double h = std::min(base - 20.0, 0.5 * (xpos(b) - left) + 10.0);
                const Pt end{left, base - h};
                out += path("ray " + cls,
                            "M " + pt(end) + " C " + pt({xpos(b), base - h}) + " " + pt({xpos(b), base - h}) + " " +
                                pt({xpos(b), base}),
                            x.str());
                out += arrowhead({left + 10.0, base - h}, end, cls);
            }
        }
    }
    out += "</svg>\n";
    return out;
}

std::string render_segment(const RenderSpec& spec)
{
    const int m = spec.size;
    const double margin = 30.0;
    const double dx = 40.0;
    const double base = 30.0 + 0.5 * (m + 1) * dx;
    auto xpos = [&](long k) { return margin + static_cast<double>(k) * dx; };

    std::vector<StyledAArc> arcs = spec.arcs;
    for (const auto& a : arcs)
        if (a.arc.m != m)
            throw std::invalid_argument("arc " + a.arc.str() + " does not belong to m = " + std::to_string(m));
    auto key = [](const StyledAArc& s) { return std::tie(s.style, s.arc); };
    std::sort(arcs.begin(), arcs.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
    arcs.erase(std::unique(arcs.begin(), arcs.end(), [&](const auto& a, const auto& b) { return key(a) == key(b); }),
               arcs.end());

    std::string out = header(2 * margin + (m + 1) * dx, base + 30.0);
    out += "<path class=\"boundary\" d=\"M " + pt({xpos(0), base}) + " L " + pt({xpos(m + 1), base}) + "\"/>\n";
    for (long k = 0; k <= m + 1; ++k)
        out += point_and_label({xpos(k), base}, {xpos(k), base + 16.0}, k);
    for (const auto& [a, style] : arcs) {
        const double r = (xpos(a.j) - xpos(a.i)) / 2.0;
        out += path("arc " + to_string(style),
                    "M " + pt({xpos(a.i), base}) + " A " + num(r) + " " + num(r) + " 0 0 1 " + pt({xpos(a.j), base}),
                    a.str());
    }
    out += "</svg>\n";
    return out;
}

}  // namespace

std::string render_svg(const RenderSpec& spec)
{
    if (spec.size < (spec.mode == RenderMode::Segment ? 0 : 1))
        throw std::invalid_argument("invalid size for rendering");
    switch (spec.mode) {
    case RenderMode::Annulus: return render_annulus(spec);
    case RenderMode::Cover: return render_cover(spec);
    case RenderMode::Segment: return render_segment(spec);
    }
    return {};
}

std::vector<std::pair<IndObj, IndObj>> ar_quiver_arrows(Rank rank, long max_len)
{
    std::vector<std::pair<IndObj, IndObj>> out;
    for (const auto& x : finite_objects(rank, max_len)) {
        if (x.length() < max_len)
            out.emplace_back(x, normalize(rank, x.start(), x.end() + 1));
        if (x.end() != x.start() + 2)
            out.emplace_back(x, normalize(rank, x.start() + 1, x.end()));
    }
    return out;
}

std::string ar_quiver_text(Rank rank, long max_len)
{
    const long n = rank.value();
    std::size_t w = 0;
    for (const auto& x : finite_objects(rank, max_len))
        w = std::max(w, x.str().size());
    // M[i,j] sits at horizontal position proportional to i + j.
    const std::size_t half = (w + 2) / 2;
    const std::string prefix_fmt = "l=" + std::to_string(max_len);

    std::ostringstream os;
    os << "AR-quiver of the tube of rank " << n << ", lengths 1.." << max_len << "\n";
    for (long l = max_len; l >= 1; --l) {
        std::string row = "l=" + std::to_string(l);
        row.resize(prefix_fmt.size() + 2, ' ');
        const std::size_t origin = row.size();
        for (long i = 0; i < n; ++i) {
            const std::size_t pos = origin + static_cast<std::size_t>(2 * i + l - 1) * half;
            if (row.size() < pos)
                row.resize(pos, ' ');
            row += IndObj::finite(rank, i, i + l + 1).str();
        }
        os << row << "\n";
    }
    os << "M[i,j] and M[i+" << n << ",j+" << n << "] are identified; the left and right columns are glued.\n";
    return os.str();
}

}  // namespace tube
