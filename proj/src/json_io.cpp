#include "tube/json_io.hpp"

namespace tube {

using nlohmann::json;

namespace {

json finite_list(const SubcatDesc& d)
{
    json arr = json::array();
    for (const auto& x : d.finite_objs())
        arr.push_back(x.str());
    return arr;
}

json index_list(const std::set<long>& s)
{
    json arr = json::array();
    for (long i : s)
        arr.push_back(i);
    return arr;
}

const json& field(const json& obj, const char* key)
{
    if (!obj.is_object() || !obj.contains(key))
        throw DocumentError(std::string("missing field '") + key + "'");
    return obj.at(key);
}

void check_schema(const json& doc)
{
    const json& s = field(doc, "schema");
    if (!s.is_number_integer() || s.get<int>() != kSchemaVersion)
        throw DocumentError("unsupported schema version " + s.dump());
}

Rank rank_of(const json& doc)
{
    const json& r = field(doc, "rank");
    if (!r.is_number_integer() || r.get<long>() < 1)
        throw DocumentError("rank must be a positive integer");
    return Rank(r.get<int>());
}

std::set<IndObj> read_finite(Rank rank, const json& part)
{
    std::set<IndObj> out;
    const json& arr = field(part, "finite");
    if (!arr.is_array())
        throw DocumentError("'finite' must be an array");
    for (const auto& s : arr) {
        if (!s.is_string())
            throw DocumentError("objects must be strings");
        IndObj x = [&] {
            try {
                return parse_object(rank, s.get<std::string>());
            } catch (const std::invalid_argument& e) {
                throw DocumentError(e.what());
            }
        }();
        if (!x.is_finite())
            throw MalformedError("infinite object " + x.str() + " in a list of finite objects");
        out.insert(x);
    }
    return out;
}

std::set<long> read_indices(const json& part, const char* key)
{
    std::set<long> out;
    const json& arr = field(part, key);
    if (!arr.is_array())
        throw DocumentError(std::string("'") + key + "' must be an array");
    for (const auto& v : arr) {
        if (!v.is_number_integer())
            throw DocumentError(std::string("'") + key + "' entries must be integers");
        out.insert(v.get<long>());
    }
    return out;
}

}  // namespace

json to_json(const TorsionPair& tp)
{
    const SubcatDesc& t = tp.torsion;
    const SubcatDesc& f = tp.torsion_free;
    if (!t.rays().empty() && !t.is_everything())
        throw MalformedError("torsion part with rays cannot be written as a pair document");
    if (!f.corays().empty())
        throw MalformedError("torsion-free part with corays cannot be written as a pair document");
    return {
        {"schema", kSchemaVersion},
        {"rank", t.rank().value()},
        {"kind", to_string(tp.kind)},
        {"torsion", {{"finite", finite_list(t)}, {"corays", index_list(t.effective_corays())}}},
        {"free", {{"finite", finite_list(f)}, {"rays", index_list(f.effective_rays())}}},
    };
}

json to_json(const MaxRigid& u)
{
    json summands = json::array();
    for (const auto& x : u.summands)
        summands.push_back(x.str());
    return {
        {"schema", kSchemaVersion},
        {"rank", u.rank().value()},
        {"kind", to_string(u.kind)},
        {"summands", summands},
    };
}

TorsionPair pair_from_json(const json& doc)
{
    check_schema(doc);
    const Rank rank = rank_of(doc);
    const json& kind = field(doc, "kind");
    if (!kind.is_string() || (kind != "ray" && kind != "coray"))
        throw DocumentError("kind must be \"ray\" or \"coray\"");
    const json& t = field(doc, "torsion");
    const json& f = field(doc, "free");
    return {
        SubcatDesc(rank, read_finite(rank, t), {}, read_indices(t, "corays")),
        SubcatDesc(rank, read_finite(rank, f), read_indices(f, "rays"), {}),
        kind == "ray" ? PairKind::Ray : PairKind::Coray,
    };
}

MaxRigid max_rigid_from_json(const json& doc)
{
    check_schema(doc);
    const Rank rank = rank_of(doc);
    const json& arr = field(doc, "summands");
    if (!arr.is_array())
        throw DocumentError("'summands' must be an array");
    std::vector<IndObj> summands;
    for (const auto& s : arr) {
        if (!s.is_string())
            throw DocumentError("objects must be strings");
        try {
            summands.push_back(parse_object(rank, s.get<std::string>()));
        } catch (const std::invalid_argument& e) {
            throw DocumentError(e.what());
        }
    }
    MaxRigid u = make_max_rigid(rank, std::move(summands));
    const json& kind = field(doc, "kind");
    if (!kind.is_string() || kind.get<std::string>() != to_string(u.kind))
        throw MalformedError("kind does not match the summands");
    return u;
}

}  // namespace tube
