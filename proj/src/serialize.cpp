#include "bdi/serialize.hpp"

#include <limits>
#include <sstream>

#include "bdi/error.hpp"

namespace bdi {

namespace {

const Json& field(const Json& doc, const char* key)
{
    if (!doc.is_object() || !doc.contains(key)) throw InvalidInstance(std::string("instance file lacks \"") + key + "\"");
    return doc.at(key);
}

std::vector<std::string> id_list(const Json& doc, const char* key)
{
    const auto& arr = field(doc, key);
    if (!arr.is_array()) throw InvalidInstance(std::string("\"") + key + "\" must be an array");
    std::vector<std::string> out;
    for (const auto& v : arr) {
        if (!v.is_string()) throw InvalidInstance(std::string("\"") + key + "\" must hold string ids");
        out.push_back(v.get<std::string>());
    }
    return out;
}

std::map<std::string, int> int_map(const Json& doc, const char* key)
{
    const auto& obj = field(doc, key);
    if (!obj.is_object()) throw InvalidInstance(std::string("\"") + key + "\" must be an object");
    std::map<std::string, int> out;
    for (const auto& [id, v] : obj.items()) {
        if (!v.is_number_integer()) throw InvalidInstance(std::string("\"") + key + "\" values must be integers");
        out[id] = v.get<int>();
    }
    return out;
}

Json triple(const Cell& c) { return Json::array({c.i, c.j, c.k}); }

}  // namespace

Instance instance_from_json(const Json& doc, BuildMode mode)
{
    BipartiteQuiver q;
    q.sources = id_list(doc, "sources");
    q.targets = id_list(doc, "targets");
    const auto& arrows = field(doc, "arrows");
    if (!arrows.is_array()) throw InvalidInstance("\"arrows\" must be an array");
    for (const auto& a : arrows) {
        if (!a.is_object() || !a.contains("from") || !a.contains("to") || !a["from"].is_string() ||
            !a["to"].is_string())
            throw InvalidInstance("each arrow needs string \"from\" and \"to\"");
        q.arrows.push_back({a["from"].get<std::string>(), a["to"].get<std::string>()});
    }
    return build_instance(q, int_map(doc, "m"), int_map(doc, "u"), mode);
}

Json instance_to_json(const Instance& instance)
{
    Json doc;
    doc["sources"] = instance.quiver().sources;
    doc["targets"] = instance.quiver().targets;
    doc["arrows"] = Json::array();
    for (const auto& a : instance.quiver().arrows) doc["arrows"].push_back({{"from", a.from}, {"to", a.to}});
    doc["m"] = Json::object();
    doc["u"] = Json::object();
    for (int g = 0; g < instance.vertex_count(); ++g) {
        const auto& vx = instance.vertex(g);
        doc["m"][vx.id] = vx.m;
        doc["u"][vx.id] = vx.u;
    }
    return doc;
}

Json instance_info_json(const Instance& instance)
{
    Json doc;
    doc["instance"] = instance_to_json(instance);
    doc["vertices"] = Json::array();
    for (int g = 0; g < instance.vertex_count(); ++g) {
        const auto& vx = instance.vertex(g);
        doc["vertices"].push_back({{"id", vx.id},
                                   {"side", vx.side == Side::target ? "target" : "source"},
                                   {"m", vx.m},
                                   {"u", vx.u},
                                   {"rows", vx.a},
                                   {"cols", vx.b},
                                   {"v", vx.v}});
    }
    doc["pages"] = Json::array();
    for (int k = 0; k < instance.arrow_count(); ++k) {
        const auto& ar = instance.arrow(k);
        doc["pages"].push_back({{"k", k + 1},
                                {"from", instance.vertex(ar.source).id},
                                {"to", instance.vertex(ar.target).id},
                                {"rows", ar.rows},
                                {"cols", ar.cols}});
    }
    doc["cells"] = instance.cell_count();
    doc["N"] = instance.facet_size();
    const auto& rep = instance.normalization();
    Json norm;
    norm["changed"] = rep.changed();
    norm["clamps"] = Json::array();
    for (const auto& c : rep.clamps) norm["clamps"].push_back({{"vertex", c.vertex}, {"from", c.from}, {"to", c.to}});
    norm["removed_vertices"] = rep.removed_vertices;
    norm["removed_arrows"] = Json::array();
    for (const auto& r : rep.removed_arrows)
        norm["removed_arrows"].push_back({{"index", r.input_index + 1},
                                          {"from", r.arrow.from},
                                          {"to", r.arrow.to},
                                          {"variables", r.rows * r.cols}});
    norm["removed_variables"] = rep.removed_variable_count();
    doc["normalization"] = norm;
    return doc;
}

Json cell_set_to_json(const Instance& instance, const CellSet& set)
{
    Json arr = Json::array();
    for (const auto& c : set.cells(instance)) arr.push_back(triple(c));
    return arr;
}

CellSet cell_set_from_json(const Instance& instance, const Json& doc)
{
    if (!doc.is_array()) throw PreconditionError("a cell set must be a JSON array");
    std::vector<Cell> cells;
    for (const auto& t : doc) {
        if (!t.is_array() || t.size() != 3) throw PreconditionError("cells must be [i, j, k] triples");
        cells.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
    }
    return CellSet::from_cells(instance, cells);
}

std::string cell_set_to_text(const Instance& instance, const CellSet& set)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& c : set.cells(instance)) {
        os << (first ? "" : " ") << "(" << c.i << "," << c.j << "," << c.k << ")";
        first = false;
    }
    return os.str();
}

Json road_map_to_json(const Instance& instance, const RoadMap& map)
{
    Json out = Json::array();
    for (const auto& fam : map.families) {
        Json paths = Json::array();
        for (std::size_t p = 0; p < fam.view_paths.size(); ++p) {
            Json path = Json::array();
            for (const auto& [r, c] : fam.block_path(static_cast<int>(p))) path.push_back(Json::array({r, c}));
            paths.push_back(path);
        }
        out.push_back({{"vertex", instance.vertex(fam.vertex).id},
                       {"direction", fam.side == Side::target ? "horizontal" : "vertical"},
                       {"paths", paths}});
    }
    return out;
}

Json corners_to_json(const Instance& instance, const CornerReport& report)
{
    Json list = Json::array();
    for (const auto& c : report.corners) {
        list.push_back({{"cell", triple(instance.cell(c.cell))},
                        {"kind", c.kind == CornerKind::nw ? "NW" : "SE"},
                        {"orientation", c.orientation == Orientation::horizontal ? "horizontal" : "vertical"},
                        {"essential", c.essential}});
    }
    return {{"corners", list}, {"essential_nw", report.essential_nw}, {"essential_se", report.essential_se}};
}

Json big_to_json(const BigInt& value)
{
    if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max())
        return Json(value.convert_to<std::int64_t>());
    return Json(value.str());
}

Json polynomial_to_json(const Polynomial& p)
{
    Json arr = Json::array();
    for (const auto& c : p) arr.push_back(big_to_json(c));
    return arr;
}

Json series_to_json(const HilbertSeries& series)
{
    return {{"numerator", polynomial_to_json(series.numerator)},
            {"denominator_exponent", series.denominator_exponent},
            {"multiplicity", big_to_json(series.multiplicity())},
            {"palindromic", series.palindromic()},
            {"rendered", series.render()}};
}

}  // namespace bdi
