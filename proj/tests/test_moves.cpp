#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "bdi/error.hpp"
#include "bdi/moves.hpp"
#include "bdi/oracle.hpp"
#include "bdi/verify.hpp"
#include "support.hpp"

using namespace bdi;

namespace {

std::set<int> added_cells(const std::vector<ChuteMove>& moves)
{
    std::set<int> out;
    for (const auto& mv : moves) out.insert(mv.added);
    return out;
}

}  // namespace

TEST_CASE("chute moves on the double example match the figure")
{
    auto inst = fixtures::double_example();
    auto figure = fixtures::double_facets_figure_order();
    auto marks = fixtures::double_move_targets_figure_order();
    for (std::size_t i = 0; i < figure.size(); ++i) {
        CAPTURE(i + 1);
        auto set = fixtures::cells(inst, figure[i]);
        auto moves = chutable_moves(inst, set);
        std::set<int> expected;
        for (const auto& c : marks[i]) expected.insert(inst.index(c));
        CHECK(moves.size() == marks[i].size());
        CHECK(added_cells(moves) == expected);
    }
}

TEST_CASE("first move of the double example")
{
    auto inst = fixtures::double_example();
    auto figure = fixtures::double_facets_figure_order();
    auto first = fixtures::cells(inst, figure[0]);
    auto moves = chutable_moves(inst, first);
    REQUIRE(moves.size() == 1);
    auto next = apply_move(inst, first, moves[0]);
    CHECK(next == fixtures::cells(inst, figure[1]));
    CHECK(cmp_t_sets(next, first) < 0);
    CHECK(is_cvm(inst, next));

    ChuteMove undo = moves[0];
    std::swap(undo.removed, undo.added);
    CHECK(apply_inverse_move(inst, next, undo) == first);
    CHECK_THROWS_AS(apply_move(inst, next, moves[0]), PreconditionError);
}

TEST_CASE("extremal facets")
{
    auto inst = fixtures::double_example();
    CellSet empty(inst.cell_count());
    CHECK(inverse_chutable_moves(inst, c_max(inst, empty)).empty());
    CHECK(chutable_moves(inst, c_min(inst, empty)).empty());
    CHECK_THROWS_AS(chutable_moves(inst, empty), PreconditionError);
}

TEST_CASE("facet enumeration counts")
{
    auto dbl = fixtures::double_example();
    auto facets = enumerate_facets(dbl);
    CHECK(facets.size() == 12);
    CHECK(facets == fixtures::double_facets_ascending(dbl));
    CHECK(facets.back() == initial_cvm(dbl));

    CHECK(enumerate_facets(fixtures::star_example()).size() == 54);

    auto det = fixtures::classical_example();
    auto classical = enumerate_facets(det);
    std::vector<CellSet> expected;
    for (Cell c : {Cell{3, 3, 1}, Cell{2, 2, 1}, Cell{1, 1, 1}})
        expected.push_back(CellSet::full(det.cell_count()).without(det.index(c)));
    CHECK(classical == expected);
}

TEST_CASE("facet cap")
{
    EnumerationOptions opts;
    opts.facet_cap = 10;
    CHECK_THROWS_AS(enumerate_facets(fixtures::double_example(), opts), ResourceLimit);
}

TEST_CASE("parallel enumeration is deterministic")
{
    auto star = fixtures::star_example();
    EnumerationOptions opts;
    opts.threads = 4;
    CHECK(enumerate_facets(star, opts) == enumerate_facets(star));
}

TEST_CASE("chute closure equals brute-force maximal sets")
{
    std::mt19937_64 rng(29);
    for (int t = 0; t < 60; ++t) {
        auto inst = random_instance(rng, 14);
        auto facets = enumerate_facets(inst);
        CHECK(facets == oracle::maximal_sets(inst));
        for (const auto& f : facets) {
            for (const auto& mv : chutable_moves(inst, f)) {
                auto g = apply_move(inst, f, mv);
                CHECK(is_cvm(inst, g));
                CHECK(cmp_t_sets(g, f) < 0);
            }
        }
    }
}
