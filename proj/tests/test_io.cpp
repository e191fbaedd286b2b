#include <doctest.h>

#include <fstream>
#include <regex>
#include <sstream>

#include "golden_specs.hpp"
#include "tube/json_io.hpp"
#include "tube/render.hpp"

using namespace tube;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

long count(const std::string& hay, const std::string& needle)
{
    long c = 0;
    for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1))
        ++c;
    return c;
}

}  // namespace

TEST_CASE("pair documents round trip")
{
    for (int n = 1; n <= 4; ++n)
        for (const auto& tp : enumerate_torsion_pairs(Rank(n))) {
            const json doc = to_json(tp);
            CHECK(doc["schema"] == 1);
            CHECK(pair_from_json(doc) == tp);
            CHECK(pair_from_json(json::parse(doc.dump())) == tp);
        }
}

TEST_CASE("rigid documents round trip")
{
    for (int n = 1; n <= 4; ++n)
        for (const auto& u : enumerate_max_rigid(Rank(n))) {
            const json doc = to_json(u);
            CHECK(max_rigid_from_json(json::parse(doc.dump())) == u);
        }
}

TEST_CASE("document layout")
{
    const Rank r(1);
    const TorsionPair all_zero{SubcatDesc::everything(r), SubcatDesc(r), PairKind::Coray};
    const json doc = to_json(all_zero);
    CHECK(doc.dump() ==
          R"({"free":{"finite":[],"rays":[]},"kind":"coray","rank":1,"schema":1,"torsion":{"corays":[0],"finite":[]}})");
    const auto u = enumerate_max_rigid(Rank(2)).front();
    CHECK(to_json(u).dump() == R"({"kind":"prufer","rank":2,"schema":1,"summands":["M[0,2]","M[0,inf]"]})");
}

TEST_CASE("malformed documents")
{
    json doc = to_json(enumerate_torsion_pairs(Rank(2)).front());
    json bad = doc;
    bad["schema"] = 2;
    CHECK_THROWS_AS(pair_from_json(bad), DocumentError);
    bad = doc;
    bad.erase("free");
    CHECK_THROWS_AS(pair_from_json(bad), DocumentError);
    bad = doc;
    bad["kind"] = "sideways";
    CHECK_THROWS_AS(pair_from_json(bad), DocumentError);
    bad = doc;
    bad["torsion"]["finite"] = json::array({"M[0,1]"});
    CHECK_THROWS_AS(pair_from_json(bad), DocumentError);
    bad = doc;
    bad["free"]["rays"] = json::array({5});
    CHECK_THROWS_AS(pair_from_json(bad), MalformedError);

    json rigid = to_json(enumerate_max_rigid(Rank(2)).front());
    rigid["summands"] = json::array({"M[0,inf]"});
    CHECK_THROWS_AS(max_rigid_from_json(rigid), MalformedError);
    rigid = to_json(enumerate_max_rigid(Rank(2)).front());
    rigid["kind"] = "adic";
    CHECK_THROWS_AS(max_rigid_from_json(rigid), MalformedError);
}

TEST_CASE("svg output matches the golden files")
{
    for (const auto& [name, spec] : golden::specs()) {
        const std::string svg = render_svg(spec);
        CHECK(svg == render_svg(spec));
        CHECK_MESSAGE(svg == slurp(std::string(TUBE_GOLDEN_DIR) + "/" + name), name);
    }
}

TEST_CASE("annulus drawing")
{
    const std::string svg = render_svg(spec_of(golden::rank14_example()));
    CHECK(count(svg, "class=\"spiral prufer\"") == 4);
    CHECK(count(svg, "class=\"arc summand\"") == 10);
    CHECK(count(svg, "class=\"point\"") == 14);
    CHECK(svg.find("-0.000") == std::string::npos);
    // every coordinate has exactly three decimals
    const std::regex loose(R"(\d\.(\d{0,2}|\d{4,})[^\d])");
    const std::string body = svg.substr(svg.find("</style>"));
    CHECK_FALSE(std::regex_search(body, loose));

    RenderSpec spec;
    spec.size = 3;
    spec.objs.push_back({IndObj::adic(Rank(3), 1), ArcStyle::Adic});
    spec.objs.push_back({IndObj::finite(Rank(3), 0, 8), ArcStyle::Summand});
    const std::string two = render_svg(spec);
    CHECK(count(two, "class=\"spiral adic\"") == 1);
    CHECK(count(two, "<polygon") == 1);
    std::swap(spec.objs[0], spec.objs[1]);
    CHECK(render_svg(spec) == two);
    spec.objs.push_back({IndObj::finite(Rank(4), 0, 2), ArcStyle::Summand});
    CHECK_THROWS_AS(render_svg(spec), std::invalid_argument);
}

TEST_CASE("segment drawing")
{
    RenderSpec spec;
    spec.mode = RenderMode::Segment;
    spec.size = 3;
    const auto tiltings = typea::enumerate_tilting(3);
    for (const auto& a : tiltings.front())
        spec.arcs.push_back({a, ArcStyle::Summand});
    const std::string svg = render_svg(spec);
    CHECK(count(svg, "class=\"point\"") == 5);
    CHECK(count(svg, "class=\"arc summand\"") == 3);
    for (int k = 0; k <= 4; ++k)
        CHECK(svg.find(">" + std::to_string(k) + "</text>") != std::string::npos);
}

TEST_CASE("cover drawing")
{
    RenderSpec spec;
    spec.mode = RenderMode::Cover;
    spec.size = 2;
    spec.objs.push_back({IndObj::finite(Rank(2), 0, 2), ArcStyle::Torsion});
    const std::string svg = render_svg(spec);
    // lifts [-2,0], [0,2], [2,4] fit in the window -2..4
    CHECK(count(svg, "class=\"arc torsion\"") == 3);
    CHECK(count(svg, "class=\"point\"") == 7);
}

TEST_CASE("AR-quiver")
{
    const Rank r(2);
    const std::string text = ar_quiver_text(r, 2);
    const std::regex label(R"(M\[\d+,\d+\])");
    CHECK(std::distance(std::sregex_iterator(text.begin(), text.end(), label), std::sregex_iterator()) == 4);
    CHECK(text.find("M[0,3]") != std::string::npos);
    CHECK(text.find("M[1,4]") != std::string::npos);

    for (int n = 1; n <= 4; ++n) {
        const auto arrows = ar_quiver_arrows(Rank(n), 5);
        for (const auto& [x, y] : arrows) {
            CHECK(hom_dim(x, y) != ExtDim::fin(0));
            const bool up = y.length() == x.length() + 1;
            const bool down = y.length() == x.length() - 1;
            CHECK((up || down));
        }
        // mesh: each x of length >= 1 has tau^-1 x reached through two paths
        for (const auto& x : finite_objects(Rank(n), 4)) {
            long outgoing = 0;
            for (const auto& [a, b] : arrows)
                outgoing += a == x;
            CHECK(outgoing == (x.length() == 1 ? 1 : 2));
        }
        // tau moves one column to the left
        for (const auto& x : finite_objects(Rank(n), 5))
            CHECK(tau(x) == normalize(Rank(n), x.start() - 1, x.end() - 1));
    }
}
