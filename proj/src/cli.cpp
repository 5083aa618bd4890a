#include "bdi/cli.hpp"

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "bdi/complex.hpp"
#include "bdi/error.hpp"
#include "bdi/ideal.hpp"
#include "bdi/moves.hpp"
#include "bdi/serialize.hpp"
#include "bdi/series.hpp"
#include "bdi/verify.hpp"
#include "bdi/vertex_map.hpp"

namespace bdi {

namespace {

std::vector<int> int_list(const std::string& body, const std::string& spec)
{
    static const std::regex shape(R"(\s*\d+\s*(,\s*\d+\s*)*)");
    if (!std::regex_match(body, shape)) throw InvalidInstance("malformed preset '" + spec + "'");
    std::vector<int> out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

Instance two_vertex(int arrows, int m, int n, int u, int v, BuildMode mode)
{
    BipartiteQuiver q{{"2"}, {"1"}, {}};
    for (int k = 0; k < arrows; ++k) q.arrows.push_back({"2", "1"});
    return build_instance(q, {{"1", m}, {"2", n}}, {{"1", u}, {"2", v}}, mode);
}

Instance star(const std::vector<std::pair<int, int>>& pairs, BuildMode mode)
{
    if (pairs.size() < 2) throw InvalidInstance("a star needs a target and at least one source");
    BipartiteQuiver q{{}, {"1"}, {}};
    std::map<std::string, int> m{{"1", pairs[0].first}}, u{{"1", pairs[0].second}};
    for (std::size_t i = 1; i < pairs.size(); ++i) {
        std::string id = std::to_string(i + 1);
        q.sources.push_back(id);
        q.arrows.push_back({id, "1"});
        m[id] = pairs[i].first;
        u[id] = pairs[i].second;
    }
    return build_instance(q, m, u, mode);
}

}  // namespace

Instance parse_preset(const std::string& spec, BuildMode mode)
{
    if (spec == "star-example") return star({{3, 2}, {2, 1}, {2, 1}, {2, 1}}, mode);
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw InvalidInstance("malformed preset '" + spec + "'");
    const std::string kind = spec.substr(0, colon);
    const std::string body = spec.substr(colon + 1);
    auto arity = [&](const std::vector<int>& v, std::size_t want) {
        if (v.size() != want)
            throw InvalidInstance("preset '" + kind + "' takes " + std::to_string(want) + " numbers");
    };
    if (kind == "det") {
        auto v = int_list(body, spec);
        arity(v, 3);
        return two_vertex(1, v[0], v[1], v[2], v[2], mode);
    }
    if (kind == "double") {
        auto v = int_list(body, spec);
        arity(v, 5);
        if (v[0] < 1) throw InvalidInstance("double preset needs at least one arrow");
        return two_vertex(v[0], v[1], v[2], v[3], v[4], mode);
    }
    if (kind == "secant") {
        auto v = int_list(body, spec);
        arity(v, 3);
        return two_vertex(2, v[0], v[1], v[2], v[2], mode);
    }
    if (kind == "star") {
        static const std::regex whole(R"(\s*\(\s*\d+\s*,\s*\d+\s*\)(\s*,\s*\(\s*\d+\s*,\s*\d+\s*\))*\s*)");
        static const std::regex pair(R"(\(\s*(\d+)\s*,\s*(\d+)\s*\))");
        if (!std::regex_match(body, whole)) throw InvalidInstance("malformed preset '" + spec + "'");
        std::vector<std::pair<int, int>> pairs;
        for (auto it = std::sregex_iterator(body.begin(), body.end(), pair); it != std::sregex_iterator(); ++it)
            pairs.emplace_back(std::stoi((*it)[1].str()), std::stoi((*it)[2].str()));
        return star(pairs, mode);
    }
    throw InvalidInstance("unknown preset kind '" + kind + "'");
}

std::optional<RunConfig> parse_args(int argc, char** argv, int& exit_code)
{
    RunConfig cfg;
    CLI::App app{"Combinatorics of bipartite determinantal ideals"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        auto* preset = sub->add_option("--preset", cfg.preset, "instance preset, e.g. double:2,3,2,1,1");
        auto* file = sub->add_option("--file", cfg.file, "instance JSON file");
        preset->excludes(file);
        sub->add_flag("--json", cfg.json, "machine-readable output");
        sub->add_flag("--strict", cfg.strict, "reject rank data instead of normalizing it");
        sub->add_option("--max-cells", cfg.max_cells, "guard for face enumeration")->check(CLI::PositiveNumber);
        sub->add_option("--facet-cap", cfg.facet_cap, "abort facet enumeration past this count")
            ->check(CLI::PositiveNumber);
        sub->add_option("--threads", cfg.threads, "worker threads for facet enumeration")->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.seed, "random seed");
    };

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"info", "block geometry, N and the normalization report"},
        {"facets", "all facets in increasing order"},
        {"multiplicity", "number of facets"},
        {"hvector", "h-polynomial coefficients"},
        {"hilbert", "Hilbert series"},
        {"fvector", "face counts by dimension"},
        {"interior", "interior face counts by dimension"},
        {"shelling", "check both shelling orders"},
        {"vdc-sample", "random purity checks of link-deletion complexes"},
        {"export-cas", "Macaulay2 or Singular script with the natural generators"},
        {"verify", "run every cross-check"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        add_common(sub);
        sub->callback([&cfg, name = name] { cfg.command = name; });
        if (name == "facets") sub->add_flag("--details", cfg.details, "include corners, moves and road maps");
        if (name == "vdc-sample") sub->add_option("--samples", cfg.samples, "number of samples")->check(CLI::PositiveNumber);
        if (name == "export-cas") {
            sub->add_option("--flavor", cfg.flavor, "m2 or singular")->check(CLI::IsMember({"m2", "singular"}));
            sub->add_option("--generator-cap", cfg.generator_cap, "largest generator count to export");
        }
        if (name == "verify") sub->add_option("--random", cfg.random, "also check this many random instances");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        exit_code = app.exit(e) == 0 ? 0 : 2;
        return std::nullopt;
    }
    return cfg;
}

namespace {

Json cell_json(const Instance& inst, int idx)
{
    Cell c = inst.cell(idx);
    return Json::array({c.i, c.j, c.k});
}

Instance load(const RunConfig& cfg)
{
    BuildMode mode = cfg.strict ? BuildMode::strict : BuildMode::normalize;
    if (!cfg.preset.empty()) return parse_preset(cfg.preset, mode);
    if (!cfg.file.empty()) {
        std::ifstream in(cfg.file);
        if (!in) throw InvalidInstance("cannot open '" + cfg.file + "'");
        Json doc;
        try {
            doc = Json::parse(in);
        } catch (const Json::parse_error& e) {
            throw InvalidInstance(std::string("invalid JSON: ") + e.what());
        }
        return instance_from_json(doc, mode);
    }
    throw InvalidInstance("an instance is required: use --preset or --file");
}

std::string show(const std::vector<std::uint64_t>& v)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::string show(const Polynomial& v)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

Json counts_json(const std::vector<std::uint64_t>& v)
{
    Json arr = Json::array();
    for (auto c : v) arr.push_back(c);
    return arr;
}

struct Session {
    const RunConfig& cfg;
    Instance instance;
    std::optional<std::vector<CellSet>> facets_;
    std::optional<FaceTable> faces_;

    const std::vector<CellSet>& facets()
    {
        if (!facets_) facets_ = enumerate_facets(instance, {cfg.facet_cap, cfg.threads});
        return *facets_;
    }

    const FaceTable& faces(bool with_interior)
    {
        if (!faces_ || (with_interior && faces_->interior.empty())) {
            faces_ = f_vector(instance, {cfg.max_cells, with_interior});
            if (with_interior) interior_faces(instance, *faces_, facets());
        }
        return *faces_;
    }

    /// h from both corner routes, plus the face routes when within guard.
    Polynomial h()
    {
        const FaceTable* table = instance.cell_count() <= cfg.max_cells ? &faces(true) : nullptr;
        return h_polynomial(instance, &facets(), table);
    }
};

void print_verify(const std::string& label, const VerifyReport& rep, bool json, Json& doc, std::ostream& out)
{
    if (json) {
        Json checks = Json::array();
        for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        doc.push_back({{"instance", label}, {"passed", rep.passed()}, {"checks", checks}});
        return;
    }
    out << "== " << label << "\n";
    for (const auto& c : rep.checks) {
        out << (c.passed ? "  ok    " : "  FAIL  ") << c.name;
        if (!c.detail.empty()) out << ": " << c.detail;
        out << "\n";
    }
}

int dispatch(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.command == "verify" && cfg.preset.empty() && cfg.file.empty() && cfg.random == 0)
        throw InvalidInstance("verify needs --preset, --file or --random");

    if (cfg.command == "verify") {
        VerifyOptions opts;
        opts.seed = cfg.seed;
        opts.facet_cap = cfg.facet_cap;
        opts.threads = cfg.threads;
        opts.face_max_cells = cfg.max_cells;
        Json doc = Json::array();
        bool ok = true;
        std::string first;
        auto record = [&](const std::string& label, const VerifyReport& rep) {
            print_verify(label, rep, cfg.json, doc, out);
            if (!rep.passed() && ok) {
                ok = false;
                auto f = rep.first_failure();
                first = label + ": " + f.name + ": " + f.detail;
            }
        };
        if (!cfg.preset.empty() || !cfg.file.empty()) {
            Instance inst = load(cfg);
            record(cfg.preset.empty() ? cfg.file : cfg.preset, verify_instance(inst, opts));
        }
        std::mt19937_64 rng(cfg.seed);
        for (int t = 0; t < cfg.random; ++t) {
            Instance inst = random_instance(rng);
            opts.seed = rng();
            record("random #" + std::to_string(t + 1) + " " + instance_to_json(inst).dump(), verify_instance(inst, opts));
        }
        if (cfg.json) out << doc.dump(2) << "\n";
        if (!ok) {
            if (!cfg.json) out << "first failure: " << first << "\n";
            return 1;
        }
        if (!cfg.json) out << "all checks passed\n";
        return 0;
    }

    Session s{cfg, load(cfg), {}, {}};
    const Instance& inst = s.instance;

    if (cfg.command == "info") {
        if (cfg.json) {
            out << instance_info_json(inst).dump(2) << "\n";
            return 0;
        }
        for (int g = 0; g < inst.vertex_count(); ++g) {
            const auto& vx = inst.vertex(g);
            out << (vx.side == Side::target ? "target " : "source ") << vx.id << ": m=" << vx.m << " u=" << vx.u
                << " block " << vx.a << "x" << vx.b << " v=" << vx.v << "\n";
        }
        for (int k = 0; k < inst.arrow_count(); ++k) {
            const auto& ar = inst.arrow(k);
            out << "page " << k + 1 << ": " << inst.vertex(ar.source).id << "->" << inst.vertex(ar.target).id << " "
                << ar.rows << "x" << ar.cols << "\n";
        }
        out << "cells " << inst.cell_count() << "\nN " << inst.facet_size() << "\n";
        const auto& rep = inst.normalization();
        for (const auto& c : rep.clamps) out << "clamped u of " << c.vertex << " from " << c.from << " to " << c.to << "\n";
        for (const auto& v : rep.removed_vertices) out << "removed vertex " << v << "\n";
        if (!rep.removed_arrows.empty())
            out << "removed " << rep.removed_arrows.size() << " arrows carrying " << rep.removed_variable_count()
                << " variables\n";
        return 0;
    }

    if (cfg.command == "facets") {
        const auto& facets = s.facets();
        if (cfg.json) {
            Json arr = Json::array();
            for (const auto& f : facets) {
                if (!cfg.details) {
                    arr.push_back(cell_set_to_json(inst, f));
                    continue;
                }
                Json moves = Json::array();
                for (const auto& mv : chutable_moves(inst, f))
                    moves.push_back({{"removed", cell_json(inst, mv.removed)}, {"added", cell_json(inst, mv.added)}});
                arr.push_back({{"cells", cell_set_to_json(inst, f)},
                               {"corners", corners_to_json(inst, corners(inst, f))},
                               {"moves", moves},
                               {"road_map", road_map_to_json(inst, road_map(inst, f))}});
            }
            out << arr.dump(cfg.details ? 2 : -1) << "\n";
            return 0;
        }
        for (const auto& f : facets) {
            out << cell_set_to_text(inst, f);
            if (cfg.details) {
                auto rep = corners(inst, f);
                out << "  | SE " << rep.essential_se << " NW " << rep.essential_nw << " moves "
                    << chutable_moves(inst, f).size();
            }
            out << "\n";
        }
        return 0;
    }

    if (cfg.command == "multiplicity") {
        auto h = s.h();
        auto mult = multiplicity(s.facets(), h);
        if (cfg.json)
            out << Json{{"multiplicity", big_to_json(mult)}}.dump() << "\n";
        else
            out << mult << "\n";
        return 0;
    }

    if (cfg.command == "hvector" || cfg.command == "hilbert") {
        auto h = s.h();
        multiplicity(s.facets(), h);
        auto series = hilbert_series(inst, h);
        if (cfg.command == "hvector") {
            if (cfg.json)
                out << Json{{"h", polynomial_to_json(series.numerator)}, {"palindromic", series.palindromic()}}.dump()
                    << "\n";
            else
                out << show(series.numerator) << "\n";
        } else {
            if (cfg.json)
                out << series_to_json(series).dump() << "\n";
            else
                out << series.render() << "\n";
        }
        return 0;
    }

    if (cfg.command == "fvector") {
        const auto& t = s.faces(false);
        if (cfg.json)
            out << Json{{"f", counts_json(t.faces)}, {"total", t.total()}}.dump() << "\n";
        else
            out << "f = " << show(t.faces) << " total " << t.total() << "\n";
        return 0;
    }

    if (cfg.command == "interior") {
        const auto& t = s.faces(true);
        auto boundary = boundary_generators(inst, s.facets()).size();
        if (cfg.json)
            out << Json{{"interior", counts_json(t.interior)}, {"total", t.interior_total()}, {"boundary_generators", boundary}}
                       .dump()
                << "\n";
        else
            out << "interior = " << show(t.interior) << " total " << t.interior_total() << ", " << boundary
                << " boundary generators\n";
        return 0;
    }

    if (cfg.command == "shelling") {
        const auto& facets = s.facets();
        std::vector<int> se, nw;
        for (const auto& f : facets) se.push_back(corners(inst, f).essential_se);
        std::vector<CellSet> rev(facets.rbegin(), facets.rend());
        for (const auto& f : rev) nw.push_back(essential_nw_cells(inst, f).count());
        auto inc = verify_shelling(inst, facets, &se);
        auto dec = verify_shelling(inst, rev, &nw);
        auto report = [](const ShellingReport& r) {
            return Json{{"passed", r.passed}, {"first_violation", r.first_violation}, {"restriction", r.restriction},
                        {"h", r.h}};
        };
        if (cfg.json) {
            out << Json{{"increasing", report(inc)}, {"decreasing", report(dec)}}.dump() << "\n";
        } else {
            out << "increasing: " << (inc.passed ? "shelling" : "FAILED " + inc.first_violation) << ", h = " << show(inc.h)
                << "\n";
            out << "decreasing: " << (dec.passed ? "shelling" : "FAILED " + dec.first_violation) << ", h = " << show(dec.h)
                << "\n";
        }
        return inc.passed && dec.passed ? 0 : 1;
    }

    if (cfg.command == "vdc-sample") {
        auto rep = check_vertex_decomposition_samples(inst, cfg.samples, std::min(cfg.max_cells, 14), cfg.seed);
        if (cfg.json)
            out << Json{{"samples", rep.samples.size()}, {"well_defined", rep.well_defined}, {"pure", rep.pure},
                        {"passed", rep.passed()}}
                       .dump()
                << "\n";
        else
            out << rep.pure << " of " << rep.well_defined << " samples pure\n";
        return rep.passed() ? 0 : 1;
    }

    if (cfg.command == "export-cas") {
        ExportOptions opts;
        opts.generator_cap = cfg.generator_cap;
        out << export_cas(inst, cfg.flavor == "singular" ? CasFlavor::singular : CasFlavor::m2, opts);
        return 0;
    }

    throw InvalidInstance("unknown command '" + cfg.command + "'");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        return dispatch(config, out);
    } catch (const VerificationFailure& e) {
        err << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const ResourceLimit& e) {
        err << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace bdi
