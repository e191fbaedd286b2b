// tubecalc: Hom/Ext, torsion pairs, maximal rigid objects and arc diagrams
// for the tube of rank n.
//
// Exit codes: 0 success, 1 usage or parse error, 2 validation failure.

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tube/homcalc.hpp"
#include "tube/json_io.hpp"
#include "tube/kernels.hpp"
#include "tube/render.hpp"
#include "tube/torsion.hpp"

using namespace tube;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;

class ValidationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw DocumentError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw DocumentError(path + ": " + e.what());
    }
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw DocumentError("cannot write " + path);
}

std::string rigid_line(const MaxRigid& u)
{
    std::string s = to_string(u.kind);
    for (const auto& x : u.summands)
        s += " " + x.str();
    return s;
}

std::string pair_line(const TorsionPair& tp)
{
    return to_string(tp.kind) + " T=" + tp.torsion.str() + " F=" + tp.torsion_free.str();
}

std::vector<typea::AArc> parse_aarc_list(int m, const std::string& text)
{
    static const std::regex tok(R"(\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\])");
    std::vector<typea::AArc> out;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), tok); it != std::sregex_iterator(); ++it)
        out.push_back(typea::AArc::make(m, std::stoi((*it)[1]), std::stoi((*it)[2])));
    return out;
}

kernels::Exec exec_of(bool parallel)
{
    return parallel ? kernels::Exec::Parallel : kernels::Exec::Serial;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Torsion pairs and maximal rigid objects in a tube"};
    app.require_subcommand(1);

    int rank = 1;
    std::string x_text;
    std::string y_text;
    bool as_json = false;
    bool parallel = false;

    auto* ext_cmd = app.add_subcommand("ext", "dimension of Ext^1(X, Y)");
    auto* hom_cmd = app.add_subcommand("hom", "dimension of Hom(X, Y)");
    for (auto* c : {ext_cmd, hom_cmd}) {
        c->add_option("--rank", rank, "rank n of the tube")->required();
        c->add_option("X", x_text)->required();
        c->add_option("Y", y_text)->required();
    }

    auto* pairs_cmd = app.add_subcommand("pairs", "torsion pairs");
    pairs_cmd->require_subcommand(1);
    auto* pairs_enum = pairs_cmd->add_subcommand("enumerate", "list all torsion pairs");
    auto* pairs_count = pairs_cmd->add_subcommand("count", "number of torsion pairs");
    auto* pairs_of_rigid = pairs_cmd->add_subcommand("of-rigid", "torsion pair of a maximal rigid object");
    std::string summands_text;
    for (auto* c : {pairs_enum, pairs_count, pairs_of_rigid})
        c->add_option("--rank", rank, "rank n of the tube")->required();
    pairs_enum->add_flag("--json", as_json, "write a JSON document");
    pairs_enum->add_flag("--parallel", parallel, "use the parallel kernels");
    pairs_count->add_flag("--parallel", parallel, "use the parallel kernels");
    pairs_of_rigid->add_option("--summands", summands_text, "summands, e.g. \"M[0,inf] M[0,2]\"")->required();

    auto* rigid_cmd = app.add_subcommand("rigid", "maximal rigid objects");
    rigid_cmd->require_subcommand(1);
    auto* rigid_enum = rigid_cmd->add_subcommand("enumerate", "list all maximal rigid objects");
    rigid_enum->add_option("--rank", rank, "rank n of the tube")->required();
    rigid_enum->add_flag("--json", as_json, "write a JSON document");
    rigid_enum->add_flag("--parallel", parallel, "use the parallel kernels");
    auto* rigid_of_pair = rigid_cmd->add_subcommand("of-pair", "maximal rigid object of a torsion pair");
    std::string pair_path;
    rigid_of_pair->add_option("--pair", pair_path, "pair document (JSON)")->required();

    auto* render_cmd = app.add_subcommand("render", "SVG arc diagram");
    std::string mode_text = "annulus";
    std::string objects_text;
    std::string torsion_text;
    std::string free_text;
    std::string arcs_text;
    std::string rigid_path;
    std::string out_path;
    int segment_m = -1;
    long max_len = 0;
    render_cmd->add_option("--mode", mode_text, "annulus, cover or segment");
    render_cmd->add_option("--rank", rank, "rank n of the tube");
    render_cmd->add_option("--m", segment_m, "number of vertices of A_m (segment mode)");
    render_cmd->add_option("--objects", objects_text, "objects drawn as summands");
    render_cmd->add_option("--torsion", torsion_text, "objects drawn in the torsion style");
    render_cmd->add_option("--free", free_text, "objects drawn in the torsion-free style");
    render_cmd->add_option("--arcs", arcs_text, "segment arcs, e.g. \"[0,2] [0,3]\"");
    render_cmd->add_option("--rigid", rigid_path, "draw a maximal rigid object document");
    render_cmd->add_option("--pair", pair_path, "draw a pair document");
    render_cmd->add_option("--max-length", max_len, "longest finite object drawn for --pair");
    render_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* quiver_cmd = app.add_subcommand("ar-quiver", "text layout of the AR-quiver");
    quiver_cmd->add_option("--rank", rank, "rank n of the tube")->required();
    quiver_cmd->add_option("--max-length", max_len, "number of rows")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    try {
        if (ext_cmd->parsed() || hom_cmd->parsed()) {
            const Rank r(rank);
            const IndObj x = parse_object(r, x_text);
            const IndObj y = parse_object(r, y_text);
            std::cout << (ext_cmd->parsed() ? ext_dim(x, y) : hom_dim(x, y)).str() << "\n";
        } else if (pairs_count->parsed()) {
            const Rank r(rank);
            std::cout << kernels::enumerate_max_rigid(r, exec_of(parallel)).size() << "\n";
        } else if (pairs_enum->parsed()) {
            const Rank r(rank);
            const auto us = kernels::enumerate_max_rigid(r, exec_of(parallel));
            const auto tps = kernels::torsion_pairs_of(us, exec_of(parallel));
            if (as_json) {
                json doc = {{"schema", kSchemaVersion}, {"rank", rank}, {"pairs", json::array()}};
                for (const auto& tp : tps)
                    doc["pairs"].push_back(to_json(tp));
                std::cout << doc.dump(2) << "\n";
            } else {
                for (const auto& tp : tps)
                    std::cout << pair_line(tp) << "\n";
            }
        } else if (pairs_of_rigid->parsed()) {
            const Rank r(rank);
            const MaxRigid u = make_max_rigid(r, parse_object_list(r, summands_text));
            std::cout << to_json(torsion_pair_of(u)).dump(2) << "\n";
        } else if (rigid_enum->parsed()) {
            const Rank r(rank);
            const auto us = kernels::enumerate_max_rigid(r, exec_of(parallel));
            if (as_json) {
                json doc = {{"schema", kSchemaVersion}, {"rank", rank}, {"rigid", json::array()}};
                for (const auto& u : us)
                    doc["rigid"].push_back(to_json(u));
                std::cout << doc.dump(2) << "\n";
            } else {
                for (const auto& u : us)
                    std::cout << rigid_line(u) << "\n";
            }
        } else if (rigid_of_pair->parsed()) {
            const TorsionPair tp = pair_from_json(read_json_file(pair_path));
            if (!is_torsion_pair(tp))
                throw ValidationFailure("not a torsion pair");
            std::cout << to_json(max_rigid_of(tp)).dump(2) << "\n";
        } else if (render_cmd->parsed()) {
            RenderSpec spec;
            if (!rigid_path.empty()) {
                spec = spec_of(max_rigid_from_json(read_json_file(rigid_path)));
                spec.mode = parse_render_mode(mode_text);
            } else if (!pair_path.empty()) {
                const TorsionPair tp = pair_from_json(read_json_file(pair_path));
                if (!is_torsion_pair(tp))
                    throw ValidationFailure("not a torsion pair");
                spec = spec_of(tp, parse_render_mode(mode_text), max_len > 0 ? max_len : tp.torsion.rank().value());
            } else {
                spec.mode = parse_render_mode(mode_text);
                if (spec.mode == RenderMode::Segment) {
                    if (segment_m < 0)
                        throw std::invalid_argument("segment mode needs --m");
                    spec.size = segment_m;
                    for (const auto& a : parse_aarc_list(segment_m, arcs_text))
                        spec.arcs.push_back({a, ArcStyle::Summand});
                } else {
                    const Rank r(rank);
                    spec.size = rank;
                    for (const auto& x : parse_object_list(r, objects_text))
                        spec.objs.push_back({x, default_style(x)});
                    for (const auto& x : parse_object_list(r, torsion_text))
                        spec.objs.push_back({x, ArcStyle::Torsion});
                    for (const auto& x : parse_object_list(r, free_text))
                        spec.objs.push_back({x, ArcStyle::Free});
                }
            }
            write_output(out_path, render_svg(spec));
        } else if (quiver_cmd->parsed()) {
            std::cout << ar_quiver_text(Rank(rank), max_len);
        }
    } catch (const MalformedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const ValidationFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const Unsupported& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
