#pragma once

// SVG arc diagrams (annulus, universal cover, segment) and a text layout of
// the AR-quiver.

#include <string>
#include <utility>
#include <vector>

#include "tube/arc.hpp"
#include "tube/torsion.hpp"
#include "tube/type_a.hpp"

namespace tube {

enum class RenderMode { Annulus, Cover, Segment };
enum class ArcStyle { Summand, Torsion, Free, Prufer, Adic };

std::string to_string(RenderMode m);
std::string to_string(ArcStyle s);
RenderMode parse_render_mode(const std::string& s);
ArcStyle parse_arc_style(const std::string& s);

struct StyledObj {
    IndObj obj;
    ArcStyle style;
};

struct StyledAArc {
    typea::AArc arc;
    ArcStyle style;
};

struct RenderSpec {
    RenderMode mode = RenderMode::Annulus;
    // rank n for annulus and cover, m for segment
    int size = 1;
    std::vector<StyledObj> objs;
    std::vector<StyledAArc> arcs;
};

// Prufer objects get the prufer style, adic objects the adic style, finite
// objects the given one.
ArcStyle default_style(const IndObj& x, ArcStyle finite_style = ArcStyle::Summand);

RenderSpec spec_of(const MaxRigid& u);
RenderSpec spec_of(const TorsionPair& tp, RenderMode mode, long max_len);

// Throws std::invalid_argument if an arc does not belong to spec.size.
std::string render_svg(const RenderSpec& spec);

// Arrows of the AR-quiver among finite objects of length <= max_len.
std::vector<std::pair<IndObj, IndObj>> ar_quiver_arrows(Rank rank, long max_len);
std::string ar_quiver_text(Rank rank, long max_len);

}  // namespace tube
