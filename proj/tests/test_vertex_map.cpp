#include <doctest.h>

#include <random>

#include "bdi/error.hpp"
#include "bdi/moves.hpp"
#include "bdi/vertex_map.hpp"
#include "bdi/verify.hpp"
#include "support.hpp"

using namespace bdi;

TEST_CASE("facet predicate")
{
    auto inst = fixtures::double_example();
    auto top = fixtures::cells(inst, fixtures::double_facets_figure_order().front());
    CHECK(is_cvm(inst, top));
    CHECK_FALSE(is_cvm(inst, CellSet(inst.cell_count())));
    CHECK_FALSE(is_cvm(inst, top.without(top.indices().front())));
    CHECK(chain_membership_holds(inst, top));
    CHECK(padded_membership_holds(inst, top));
    CHECK_FALSE(chain_membership_holds(inst, top.without(top.indices().back())));
}

TEST_CASE("greedy closures on the double example")
{
    auto inst = fixtures::double_example();
    auto figure = fixtures::double_facets_figure_order();
    CellSet empty(inst.cell_count());
    CHECK(c_max(inst, empty) == fixtures::cells(inst, figure.front()));
    CHECK(c_min(inst, empty) == fixtures::cells(inst, figure.back()));
    for (const auto& f : figure) {
        auto set = fixtures::cells(inst, f);
        CHECK(c_max(inst, set) == set);
        CHECK(c_min(inst, set) == set);
    }
    CHECK_THROWS_AS(c_max(inst, fixtures::cells(inst, {{1, 1, 1}, {2, 2, 1}})), PreconditionError);
}

TEST_CASE("initial map closed form")
{
    auto inst = fixtures::double_example();
    auto init = initial_cvm(inst);
    CHECK(init == fixtures::cells(inst, {{3, 2, 1}, {1, 2, 2}, {2, 2, 2}, {3, 1, 2}, {3, 2, 2}}));

    auto star = fixtures::star_example();
    std::vector<Cell> expected{{2, 2, 1}, {2, 2, 2}, {2, 2, 3}, {1, 2, 2}, {1, 2, 3}};
    for (int k = 1; k <= 3; ++k)
        for (int j = 1; j <= 2; ++j) expected.push_back({3, j, k});
    auto star_init = initial_cvm(star);
    CHECK(star_init.count() == 11);
    CHECK(star_init == fixtures::cells(star, expected));
    CHECK(star_init == c_max(star, CellSet(star.cell_count())));

    auto one = fixtures::single_cell();
    CHECK(initial_cvm(one) == CellSet::full(1));
}

TEST_CASE("initial map closed form matches greedy on random instances")
{
    std::mt19937_64 rng(13);
    for (int t = 0; t < 150; ++t) {
        auto inst = random_instance(rng, 20);
        CHECK(initial_cvm(inst) == c_max(inst, CellSet(inst.cell_count())));
    }
}

TEST_CASE("road map of the classical example")
{
    auto inst = fixtures::classical_example();
    auto facet = CellSet::full(inst.cell_count()).without(inst.index({1, 1, 1}));
    REQUIRE(is_cvm(inst, facet));
    auto map = road_map(inst, facet);
    const auto& fam = map.families[static_cast<std::size_t>(inst.vertex_index("1"))];
    REQUIRE(fam.view_paths.size() == 2);
    std::vector<std::pair<int, int>> first{{2, 1}, {2, 2}, {1, 2}, {1, 3}};
    CHECK(fam.block_path(0) == first);
    std::vector<std::pair<int, int>> second{{3, 1}, {3, 2}, {3, 3}, {2, 3}};
    CHECK(fam.block_path(1) == second);
}

TEST_CASE("road maps of initial maps have the expected endpoints")
{
    std::mt19937_64 rng(17);
    for (int t = 0; t < 60; ++t) {
        auto inst = random_instance(rng);
        auto init = initial_cvm(inst);
        auto map = road_map(inst, init);
        for (const auto& fam : map.families) {
            const auto& vx = inst.vertex(fam.vertex);
            for (int p = 1; p <= vx.u; ++p) {
                auto path = fam.block_path(p - 1);
                if (fam.side == Side::target) {
                    CHECK(path.front() == std::pair{vx.a - vx.u + p, 1});
                    CHECK(path.back() == std::pair{p, vx.b});
                } else {
                    CHECK(path.front() == std::pair{1, vx.b - vx.u + p});
                    CHECK(path.back() == std::pair{vx.a, p});
                }
            }
        }
    }
}

TEST_CASE("single-cell road map")
{
    auto one = fixtures::single_cell();
    auto map = road_map(one, CellSet::full(1));
    REQUIRE(map.families.size() == 2);
    for (const auto& fam : map.families) {
        REQUIRE(fam.view_paths.size() == 1);
        CHECK(fam.block_path(0) == std::vector<std::pair<int, int>>{{1, 1}});
    }
    CHECK_THROWS_AS(road_map(one, CellSet(1)), PreconditionError);
}

TEST_CASE("essential corner counts on the double example")
{
    auto inst = fixtures::double_example();
    auto figure = fixtures::double_facets_figure_order();
    for (std::size_t i = 0; i < figure.size(); ++i) {
        CAPTURE(i + 1);
        auto set = fixtures::cells(inst, figure[i]);
        auto rep = corners(inst, set);
        CHECK(rep.essential_se == fixtures::double_se_counts[i]);
        CHECK(rep.essential_nw == fixtures::double_nw_counts[i]);
        CHECK(essential_nw_cells(inst, set).count() == fixtures::double_nw_counts[i]);
        for (const auto& c : rep.corners) CHECK(set.test(c.cell));
    }
    CHECK(corners(inst, initial_cvm(inst)).essential_nw == 0);
}

TEST_CASE("initial maps have no essential NW corners")
{
    std::mt19937_64 rng(19);
    for (int t = 0; t < 60; ++t) {
        auto inst = random_instance(rng);
        CHECK(essential_nw_cells(inst, initial_cvm(inst)).empty());
    }
}

TEST_CASE("reflection")
{
    auto inst = fixtures::double_example();
    auto init = initial_cvm(inst);
    auto [mirror, image] = reflect(inst, init);
    auto back = reflect_set(mirror, inst, image);
    CHECK(back == init);
    CHECK(image == c_min(mirror, CellSet(mirror.cell_count())));
    CHECK(reflect(mirror) == inst);

    auto one = fixtures::single_cell();
    auto [m1, i1] = reflect(one, CellSet::full(1));
    CHECK(m1 == one);
    CHECK(i1 == CellSet::full(1));

    // a page cell maps to the rotated position on the reversed page
    CHECK(mirror.cell(reflect_cell(inst, inst.index({1, 2, 1}))) == Cell{3, 1, 2});
}
