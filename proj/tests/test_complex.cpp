#include <doctest.h>

#include <random>
#include <set>

#include "bdi/complex.hpp"
#include "bdi/error.hpp"
#include "bdi/moves.hpp"
#include "bdi/oracle.hpp"
#include "bdi/vertex_map.hpp"
#include "bdi/verify.hpp"
#include "support.hpp"

using namespace bdi;

using Counts = std::vector<std::uint64_t>;

TEST_CASE("f-vectors")
{
    auto dbl = f_vector(fixtures::double_example());
    CHECK(dbl.faces == Counts{1, 12, 42, 64, 45, 12});
    CHECK(dbl.total() == 176);

    auto star = f_vector(fixtures::star_example());
    CHECK(star.faces == Counts{1, 18, 144, 670, 2013, 4110, 5837, 5784, 3930, 1748, 459, 54});
    CHECK(star.total() == 24768);

    CHECK(f_vector(fixtures::single_cell()).faces == Counts{1, 1});

    FaceOptions small;
    small.max_cells = 10;
    CHECK_THROWS_AS(f_vector(fixtures::double_example(), small), ResourceLimit);
}

TEST_CASE("f-vector agrees with brute force")
{
    std::mt19937_64 rng(31);
    for (int t = 0; t < 40; ++t) {
        auto inst = random_instance(rng, 14);
        auto counts = oracle::face_counts(inst);
        counts.resize(static_cast<std::size_t>(inst.facet_size()) + 1, 0);
        auto table = f_vector(inst);
        CHECK(table.faces == counts);
        CHECK(table.faces.back() == enumerate_facets(inst).size());
    }
}

TEST_CASE("codimension-one membership")
{
    auto inst = fixtures::double_example();
    auto facets = enumerate_facets(inst);
    // facet 2 of the figure has two essential SE corners
    auto f = fixtures::cells(inst, fixtures::double_facets_figure_order()[1]);
    auto rep = corners(inst, f);
    std::set<int> se_cells;
    for (const auto& c : rep.corners)
        if (c.kind == CornerKind::se && c.essential) se_cells.insert(c.cell);
    int checked = 0;
    for (int cell : se_cells) {
        auto holders = codim1_membership(inst, f.without(cell));
        CHECK(holders.size() == 2);
        ++checked;
    }
    CHECK(checked == 2);

    auto top = initial_cvm(inst);
    int boundary = 0;
    for (int idx : top.indices()) {
        auto holders = codim1_membership(inst, top.without(idx));
        int scan = 0;
        for (const auto& g : facets) scan += top.without(idx).is_subset_of(g) ? 1 : 0;
        CHECK(static_cast<int>(holders.size()) == scan);
        boundary += scan == 1 ? 1 : 0;
    }
    CHECK(boundary >= 1);

    auto one = fixtures::single_cell();
    CHECK(codim1_membership(one, CellSet(1)).size() == 1);
    CHECK_THROWS_AS(codim1_membership(inst, top), PreconditionError);
}

TEST_CASE("interior faces")
{
    auto dbl = fixtures::double_example();
    auto t = f_vector(dbl, {32, true});
    interior_faces(dbl, t, enumerate_facets(dbl));
    CHECK(t.interior == Counts{0, 0, 0, 4, 15, 12});
    CHECK(t.interior_total() == 31);

    auto star = fixtures::star_example();
    auto s = f_vector(star, {32, true});
    interior_faces(star, s, enumerate_facets(star));
    CHECK(s.interior == Counts{0, 0, 0, 0, 0, 0, 1, 12, 57, 128, 135, 54});
    CHECK(s.interior_total() == 387);

    auto one = fixtures::single_cell();
    auto o = f_vector(one, {32, true});
    interior_faces(one, o, enumerate_facets(one));
    CHECK(o.interior == Counts{0, 1});

    auto plain = f_vector(dbl);
    CHECK_THROWS_AS(interior_faces(dbl, plain, enumerate_facets(dbl)), PreconditionError);
}

TEST_CASE("interior faces agree with brute force")
{
    std::mt19937_64 rng(37);
    for (int t = 0; t < 30; ++t) {
        auto inst = random_instance(rng, 12);
        auto facets = enumerate_facets(inst);
        auto table = f_vector(inst, {32, true});
        interior_faces(inst, table, facets);
        CHECK(table.interior == oracle::interior_counts(inst, facets));
    }
}

TEST_CASE("shelling of the double example")
{
    auto inst = fixtures::double_example();
    auto facets = enumerate_facets(inst);
    std::vector<int> se(fixtures::double_se_counts.rbegin(), fixtures::double_se_counts.rend());
    auto inc = verify_shelling(inst, facets, &se);
    CHECK(inc.passed);
    CHECK(inc.restriction == se);
    CHECK(inc.h == Counts{1, 7, 4});

    auto figure = fixtures::double_facets_figure_order();
    std::vector<CellSet> dec;
    for (const auto& f : figure) dec.push_back(fixtures::cells(inst, f));
    auto d = verify_shelling(inst, dec, &fixtures::double_nw_counts);
    CHECK(d.passed);
    CHECK(d.h == Counts{1, 7, 4});

    // swapping two facets that share no ridge breaks the shelling
    std::vector<CellSet> bad = facets;
    std::swap(bad[1], bad[11]);
    CHECK_FALSE(verify_shelling(inst, bad).passed);

    auto one = fixtures::single_cell();
    CHECK(verify_shelling(one, enumerate_facets(one)).passed);
}

TEST_CASE("shelling of the star example")
{
    auto inst = fixtures::star_example();
    auto facets = enumerate_facets(inst);
    std::vector<int> se;
    for (const auto& f : facets) se.push_back(corners(inst, f).essential_se);
    auto rep = verify_shelling(inst, facets, &se);
    CHECK(rep.passed);
    CHECK(rep.h == Counts{1, 7, 19, 19, 7, 1});
}

TEST_CASE("link-deletion purity samples")
{
    auto inst = fixtures::double_example();
    auto whole = vdc_sample(inst, 0, CellSet(inst.cell_count()));
    CHECK(whole.well_defined);
    CHECK(whole.pure);
    CHECK(whole.max_size == inst.facet_size());

    auto top = initial_cvm(inst);
    auto end = vdc_sample(inst, inst.cell_count(), top);
    CHECK(end.pure);
    CHECK(end.max_size == 0);

    auto bad = vdc_sample(inst, 4, fixtures::cells(inst, {{1, 1, 1}, {2, 2, 1}}));
    CHECK_FALSE(bad.well_defined);

    auto rep = check_vertex_decomposition_samples(inst, 100, 14, 3);
    CHECK(rep.passed());
    CHECK(rep.well_defined == 100);

    CHECK_THROWS_AS(check_vertex_decomposition_samples(fixtures::star_example(), 1), ResourceLimit);
}
