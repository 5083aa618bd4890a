#include "bdi/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_set>

#include "bdi/chains.hpp"
#include "bdi/complex.hpp"
#include "bdi/error.hpp"
#include "bdi/ideal.hpp"
#include "bdi/moves.hpp"
#include "bdi/oracle.hpp"
#include "bdi/serialize.hpp"
#include "bdi/series.hpp"
#include "bdi/vertex_map.hpp"

namespace bdi {

bool VerifyReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

CheckResult VerifyReport::first_failure() const
{
    for (const auto& c : checks)
        if (!c.passed) return c;
    return {};
}

namespace {

struct Failed {
    std::string why;
};

void expect(bool condition, const std::string& why)
{
    if (!condition) throw Failed{why};
}

std::string cells_of(const Instance& instance, const CellSet& set) { return "{" + cell_set_to_text(instance, set) + "}"; }

template <typename T>
std::string list(const std::vector<T>& v)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

class Runner {
public:
    explicit Runner(VerifyReport& report) : report_(report) {}

    void run(const std::string& name, const std::function<std::string()>& body)
    {
        CheckResult r{name, true, {}};
        try {
            r.detail = body();
        } catch (const Failed& f) {
            r.passed = false;
            r.detail = f.why;
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        report_.checks.push_back(std::move(r));
    }

    void skip(const std::string& name, const std::string& why) { report_.checks.push_back({name, true, "skipped: " + why}); }

private:
    VerifyReport& report_;
};

CellSet random_subset(const Instance& instance, std::mt19937_64& rng)
{
    double p = std::uniform_real_distribution<double>(0.05, 0.6)(rng);
    CellSet s(instance.cell_count());
    for (int i = 0; i < instance.cell_count(); ++i)
        if (std::bernoulli_distribution(p)(rng)) s.set(i);
    return s;
}

CellSet random_compatible(const Instance& instance, std::mt19937_64& rng)
{
    std::vector<int> order(static_cast<std::size_t>(instance.cell_count()));
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::shuffle(order.begin(), order.end(), rng);
    double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    CellSet s(instance.cell_count());
    for (int idx : order)
        if (std::bernoulli_distribution(p)(rng) && can_extend(instance, s, idx)) s.set(idx);
    return s;
}

}  // namespace

VerifyReport verify_instance(const Instance& instance, const VerifyOptions& options)
{
    VerifyReport report;
    Runner runner(report);
    std::mt19937_64 rng(options.seed);
    const int cells = instance.cell_count();
    const int n = instance.facet_size();
    const bool brute = cells <= options.brute_max_cells;

    std::vector<CellSet> facets;
    runner.run("initial map closed form equals greedy C_max", [&] {
        CellSet closed = initial_cvm(instance);
        CellSet greedy = c_max(instance, CellSet(cells));
        expect(closed == greedy, "closed form " + cells_of(instance, closed) + " but greedy " + cells_of(instance, greedy));
        return std::string();
    });

    runner.run("facet enumeration", [&] {
        facets = enumerate_facets(instance, {options.facet_cap, options.threads});
        expect(!facets.empty(), "no facets");
        for (std::size_t i = 1; i < facets.size(); ++i)
            expect(cmp_t_sets(facets[i - 1], facets[i]) < 0, "facets are not strictly increasing");
        return std::to_string(facets.size()) + " facets";
    });
    if (facets.empty()) return report;
    std::unordered_set<CellSet, CellSetHash> facet_set(facets.begin(), facets.end());

    if (brute) {
        runner.run("chute closure equals brute-force maximal sets", [&] {
            auto maximal = oracle::maximal_sets(instance);
            expect(maximal == facets, "brute force finds " + std::to_string(maximal.size()) + " maximal sets, closure " +
                                          std::to_string(facets.size()));
            return std::string();
        });
    } else {
        runner.skip("chute closure equals brute-force maximal sets", "lattice above brute-force guard");
    }

    runner.run("every facet satisfies all characterizations", [&] {
        for (const auto& f : facets) {
            expect(f.count() == n, "facet of wrong size " + cells_of(instance, f));
            expect(is_cvm(instance, f), "is_cvm rejects " + cells_of(instance, f));
            expect(chain_membership_holds(instance, f), "chain criterion fails on " + cells_of(instance, f));
            expect(padded_membership_holds(instance, f), "padded criterion fails on " + cells_of(instance, f));
            road_map(instance, f);
        }
        return std::string();
    });

    runner.run("barred statistics match padded-set chains", [&] {
        std::vector<CellSet> probes;
        for (std::size_t i = 0; i < facets.size() && i < 20; ++i) probes.push_back(facets[i]);
        for (int t = 0; t < 20; ++t) probes.push_back(random_compatible(instance, rng));
        for (const auto& s : probes) {
            for (int idx = 0; idx < cells; ++idx) {
                Cell c = instance.cell(idx);
                auto st = corner_stats(instance, s, idx);
                auto tb = oracle::padded_target(instance, s, c);
                auto sb = oracle::padded_source(instance, s, c);
                expect(st.target.r_bar == tb.r_bar && st.target.s_bar == tb.s_bar &&
                           st.source.r_bar == sb.r_bar && st.source.s_bar == sb.s_bar,
                       "mismatch at cell " + std::to_string(idx) + " of " + cells_of(instance, s));
            }
        }
        return std::string();
    });

    runner.run("facet characterizations agree on random subsets", [&] {
        int hits = 0;
        for (int t = 0; t < options.subsets; ++t) {
            CellSet s;
            switch (t % 3) {
                case 0: s = random_subset(instance, rng); break;
                case 1: s = facets[std::uniform_int_distribution<std::size_t>(0, facets.size() - 1)(rng)]; break;
                default: {
                    s = facets[std::uniform_int_distribution<std::size_t>(0, facets.size() - 1)(rng)];
                    int flip = std::uniform_int_distribution<int>(0, cells - 1)(rng);
                    if (s.test(flip)) s.reset(flip); else s.set(flip);
                    if (std::bernoulli_distribution(0.5)(rng)) {
                        int other = std::uniform_int_distribution<int>(0, cells - 1)(rng);
                        if (s.test(other)) s.reset(other); else s.set(other);
                    }
                }
            }
            bool truth = facet_set.count(s) > 0;
            bool by_size = is_cvm(instance, s);
            bool by_chain = chain_membership_holds(instance, s);
            bool by_padded = padded_membership_holds(instance, s);
            expect(by_size == truth && by_chain == truth && by_padded == truth,
                   "criteria disagree on " + cells_of(instance, s));
            hits += truth ? 1 : 0;
        }
        return std::to_string(options.subsets) + " subsets, " + std::to_string(hits) + " facets among them";
    });

    FaceTable table;
    bool have_faces = false;
    if (cells <= options.face_max_cells) {
        runner.run("face enumeration and interior faces", [&] {
            table = f_vector(instance, {options.face_max_cells, true});
            interior_faces(instance, table, facets);
            have_faces = true;
            expect(table.faces.back() == facets.size(), "top face count differs from the facet count");
            if (brute) {
                auto counts = oracle::face_counts(instance);
                counts.resize(table.faces.size(), 0);
                expect(counts == table.faces, "f-vector " + list(table.faces) + " but brute force " + list(counts));
                auto inner = oracle::interior_counts(instance, facets);
                expect(inner == table.interior,
                       "interior " + list(table.interior) + " but brute force " + list(inner));
            }
            return "f " + list(table.faces) + ", interior " + list(table.interior);
        });
    } else {
        runner.skip("face enumeration and interior faces", "lattice above face guard");
    }

    Polynomial h;
    runner.run("h-polynomial routes agree", [&] {
        h = h_polynomial(instance, &facets, have_faces ? &table : nullptr);
        expect(h.front() == 1, "h_0 is not 1");
        expect(std::all_of(h.begin(), h.end(), [](const BigInt& c) { return c >= 0; }), "negative h entry");
        expect(static_cast<int>(h.size()) - 1 <= n, "degree exceeds N");
        std::vector<std::string> shown;
        for (const auto& c : h) shown.push_back(c.str());
        return "h = " + list(shown);
    });

    runner.run("multiplicity equals H(1)", [&] {
        expect(!h.empty(), "no h-polynomial");
        return "multiplicity " + multiplicity(facets, h).str();
    });

    if (have_faces) {
        runner.run("Hilbert series from all faces equals the one from interior faces", [&] {
            expect(!h.empty(), "no h-polynomial");
            auto series = hilbert_series_checked(instance, h, table);
            return series.render();
        });
    }

    runner.run("increasing order is a shelling with SE-corner restrictions", [&] {
        std::vector<int> se;
        for (const auto& f : facets) se.push_back(corners(instance, f).essential_se);
        auto rep = verify_shelling(instance, facets, &se);
        expect(rep.passed, rep.first_violation);
        return std::string();
    });

    runner.run("decreasing order is a shelling with NW-corner restrictions", [&] {
        std::vector<CellSet> rev(facets.rbegin(), facets.rend());
        std::vector<int> nw;
        for (const auto& f : rev) nw.push_back(essential_nw_cells(instance, f).count());
        auto rep = verify_shelling(instance, rev, &nw);
        expect(rep.passed, rep.first_violation);
        Polynomial hr;
        for (auto c : rep.h) hr.push_back(c);
        expect(trimmed(hr) == h, "h-vector of the decreasing shelling differs");
        return std::string();
    });

    runner.run("codimension-one faces lie in one or two facets", [&] {
        std::unordered_set<CellSet, CellSetHash> seen;
        int boundary = 0;
        for (const auto& f : facets) {
            for (int idx : f.indices()) {
                CellSet s = f.without(idx);
                if (!seen.insert(s).second) continue;
                std::vector<CellSet> holders;
                for (const auto& g : facets)
                    if (s.is_subset_of(g)) holders.push_back(g);
                expect(holders.size() <= 2, "a codimension-one face lies in more than two facets");
                auto closure = codim1_membership(instance, s);
                std::sort(closure.begin(), closure.end(),
                          [](const CellSet& a, const CellSet& b) { return cmp_t_sets(a, b) < 0; });
                expect(closure == holders, "closures disagree with the facet scan on " + cells_of(instance, s));
                boundary += holders.size() == 1 ? 1 : 0;
            }
        }
        expect(boundary >= 1, "empty boundary");
        return std::to_string(seen.size()) + " codimension-one faces, " + std::to_string(boundary) + " on the boundary";
    });

    runner.run("reflection duality", [&] {
        Instance mirror = reflect(instance);
        CellSet empty(cells);
        expect(reflect_set(mirror, instance, c_max(mirror, empty)) == c_min(instance, empty),
               "C_min differs from the mirrored C_max");
        for (const auto& f : facets) {
            CellSet g = reflect_set(instance, mirror, f);
            expect(reflect_set(mirror, instance, g) == f, "reflection is not an involution");
            expect(is_cvm(mirror, g), "mirror image is not a facet");
            std::set<std::pair<int, int>> inverse, mirrored;
            for (const auto& mv : inverse_chutable_moves(instance, f)) inverse.insert({mv.removed, mv.added});
            for (const auto& mv : chutable_moves(mirror, g))
                mirrored.insert({reflect_cell(mirror, mv.removed), reflect_cell(mirror, mv.added)});
            expect(inverse == mirrored, "inverse moves do not mirror chute moves");
            expect(corners(instance, f).essential_se == essential_nw_cells(mirror, g).count(),
                   "SE corners do not mirror NW corners");
        }
        return std::string();
    });

    runner.run("chute move graph", [&] {
        int sinks = 0;
        int sources = 0;
        CellSet empty(cells);
        for (const auto& f : facets) {
            auto moves = chutable_moves(instance, f);
            auto back = inverse_chutable_moves(instance, f);
            if (moves.empty()) {
                ++sinks;
                expect(f == c_min(instance, empty), "a facet other than C_min admits no move");
            }
            if (back.empty()) {
                ++sources;
                expect(f == c_max(instance, empty), "a facet other than C_max admits no inverse move");
            }
            for (const auto& mv : moves) {
                CellSet g = apply_move(instance, f, mv);
                expect(facet_set.count(g) > 0, "a move leaves the facet set");
                expect(cmp_t_sets(g, f) < 0, "a move does not decrease the facet");
                ChuteMove undo = mv;
                std::swap(undo.removed, undo.added);
                expect(apply_inverse_move(instance, g, undo) == f, "the inverse move does not undo the move");
            }
        }
        expect(sinks == 1 && sources == 1, "move graph needs exactly one source and one sink");
        expect(essential_nw_cells(instance, c_max(instance, empty)).empty(), "the initial map has essential NW corners");
        return std::string();
    });

    runner.run("greedy closures", [&] {
        for (int t = 0; t < 50; ++t) {
            CellSet s = random_compatible(instance, rng);
            CellSet hi = c_max(instance, s);
            CellSet lo = c_min(instance, s);
            expect(s.is_subset_of(hi) && s.is_subset_of(lo), "closure lost a seed cell");
            expect(facet_set.count(hi) && facet_set.count(lo), "closure is not a facet");
            expect(c_max(instance, hi) == hi, "C_max is not idempotent");
            for (const auto& f : facets) {
                if (!s.is_subset_of(f)) continue;
                expect(cmp_t_sets(hi, f) >= 0 && cmp_t_sets(lo, f) <= 0, "closure is not extremal");
                bool holds_corners = essential_nw_cells(instance, f).is_subset_of(s);
                expect((hi == f) == holds_corners, "C_max equality does not match the NW-corner condition");
            }
        }
        return std::string();
    });

    runner.run("initial-ideal membership routes agree", [&] {
        std::uint64_t tested = 0;
        auto check = [&](const Monomial& mono) {
            bool a = in_initial_ideal_by_generators(instance, mono);
            bool b = in_initial_ideal_by_facets(facets, mono, cells);
            expect(a == b, "routes disagree on " + cells_of(instance, mono.support(cells)));
            ++tested;
        };
        if (cells <= options.membership_max_cells) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
                CellSet s(cells);
                for (int i = 0; i < cells; ++i)
                    if (mask >> i & 1U) s.set(i);
                check(Monomial::squarefree(s));
            }
        } else {
            for (int t = 0; t < 2000; ++t) {
                Monomial mono;
                for (int i = 0; i < cells; ++i)
                    if (std::bernoulli_distribution(0.3)(rng))
                        mono.powers.emplace_back(i, std::uniform_int_distribution<int>(1, 3)(rng));
                check(mono);
            }
        }
        return std::to_string(tested) + " monomials";
    });

    runner.run("minimal non-faces are leading monomials", [&] {
        ChainStream chains(instance);
        BigInt count = 0;
        std::unordered_set<CellSet, CellSetHash> supports;
        while (auto mono = chains.next()) {
            ++count;
            CellSet s = mono->support(cells);
            expect(!is_u_compatible(instance, s), "a leading monomial is a face");
            supports.insert(s);
        }
        MinorStream minors(instance);
        BigInt minor_count = 0;
        while (minors.next()) ++minor_count;
        expect(count == minor_count && count == natural_generator_count(instance), "generator counts differ");
        int minimal = 0;
        if (cells <= options.membership_max_cells) {
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << cells); ++mask) {
                CellSet s(cells);
                for (int i = 0; i < cells; ++i)
                    if (mask >> i & 1U) s.set(i);
                if (is_u_compatible(instance, s)) continue;
                auto idx = s.indices();
                bool is_minimal = std::all_of(idx.begin(), idx.end(),
                                              [&](int i) { return is_u_compatible(instance, s.without(i)); });
                if (!is_minimal) continue;
                ++minimal;
                expect(supports.count(s) > 0, "minimal non-face " + cells_of(instance, s) + " is no leading monomial");
            }
        }
        return count.str() + " generators, " + std::to_string(minimal) + " minimal non-faces";
    });

    if (cells <= 14) {
        runner.run("link-deletion purity samples", [&] {
            auto rep = check_vertex_decomposition_samples(instance, 20, 14, options.seed);
            expect(rep.passed(), "an impure sample was found");
            return std::to_string(rep.pure) + " pure samples";
        });
    }

    runner.run("facet JSON round trip", [&] {
        for (const auto& f : facets) {
            auto text = cell_set_to_json(instance, f).dump();
            CellSet back = cell_set_from_json(instance, Json::parse(text));
            expect(back == f && is_cvm(instance, back), "round trip changed a facet");
        }
        return std::string();
    });

    return report;
}

Instance random_instance(std::mt19937_64& rng, int max_cells)
{
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (;;) {
        int ns = pick(1, 3);
        int nt = pick(1, 2);
        int na = pick(std::max(ns, nt), 4);
        BipartiteQuiver q;
        for (int i = 0; i < ns; ++i) q.sources.push_back("s" + std::to_string(i + 1));
        for (int i = 0; i < nt; ++i) q.targets.push_back("t" + std::to_string(i + 1));
        for (int i = 0; i < na; ++i) {
            int s = i < ns ? i : pick(0, ns - 1);
            int t = i < nt ? i : pick(0, nt - 1);
            q.arrows.push_back({q.sources[static_cast<std::size_t>(s)], q.targets[static_cast<std::size_t>(t)]});
        }
        std::shuffle(q.arrows.begin(), q.arrows.end(), rng);
        std::map<std::string, int> m, u, a, b;
        for (const auto& id : q.sources) m[id] = pick(1, 3);
        for (const auto& id : q.targets) m[id] = pick(1, 3);
        int lattice = 0;
        for (const auto& ar : q.arrows) {
            a[ar.from] += m[ar.to];
            b[ar.to] += m[ar.from];
            lattice += m[ar.to] * m[ar.from];
        }
        if (lattice > max_cells) continue;
        for (const auto& id : q.sources) u[id] = pick(1, std::min(a[id], m[id]));
        for (const auto& id : q.targets) u[id] = pick(1, std::min(m[id], b[id]));
        try {
            Instance inst = build_instance(q, m, u, BuildMode::normalize);
            if (inst.cell_count() >= 1 && inst.cell_count() <= max_cells) return inst;
        } catch (const InvalidInstance&) {
        }
    }
}

}  // namespace bdi
