#include <doctest.h>

#include <random>

#include "bdi/complex.hpp"
#include "bdi/error.hpp"
#include "bdi/moves.hpp"
#include "bdi/series.hpp"
#include "bdi/verify.hpp"
#include "support.hpp"

using namespace bdi;

namespace {

Polynomial poly(std::initializer_list<int> coeffs)
{
    Polynomial p;
    for (int c : coeffs) p.emplace_back(c);
    return p;
}

Polynomial all_routes(const Instance& inst)
{
    auto facets = enumerate_facets(inst);
    auto table = f_vector(inst, {32, true});
    interior_faces(inst, table, facets);
    return h_polynomial(inst, &facets, &table);
}

}  // namespace

TEST_CASE("h-polynomial of the double example by every route")
{
    auto inst = fixtures::double_example();
    auto facets = enumerate_facets(inst);
    auto table = f_vector(inst, {32, true});
    interior_faces(inst, table, facets);
    CHECK(h_from_se_corners(inst, facets) == poly({1, 7, 4}));
    CHECK(h_from_nw_corners(inst, facets) == poly({1, 7, 4}));
    CHECK(h_from_faces(inst, table) == poly({1, 7, 4}));
    CHECK(h_from_interior(inst, table) == poly({1, 7, 4}));
    CHECK(h_polynomial(inst, &facets, &table) == poly({1, 7, 4}));
    CHECK_THROWS_AS(h_polynomial(inst, nullptr, nullptr), PreconditionError);
}

TEST_CASE("h-polynomial of the star example and the single cell")
{
    CHECK(all_routes(fixtures::star_example()) == poly({1, 7, 19, 19, 7, 1}));
    CHECK(all_routes(fixtures::single_cell()) == poly({1}));
}

TEST_CASE("Hilbert series rendering and multiplicity")
{
    auto dbl = fixtures::double_example();
    auto hs = hilbert_series(dbl, poly({1, 7, 4}));
    CHECK(hs.denominator_exponent == 5);
    CHECK(hs.render() == "(1+7t+4t^2)/(1-t)^5");
    CHECK(hs.multiplicity() == 12);
    CHECK_FALSE(hs.palindromic());

    auto star = hilbert_series(fixtures::star_example(), poly({1, 7, 19, 19, 7, 1}));
    CHECK(star.render() == "(1+7t+19t^2+19t^3+7t^4+t^5)/(1-t)^11");
    CHECK(star.multiplicity() == 54);
    CHECK(star.palindromic());

    CHECK(hilbert_series(fixtures::single_cell(), poly({1})).render() == "1/(1-t)");

    auto facets = enumerate_facets(dbl);
    CHECK(multiplicity(facets, poly({1, 7, 4})) == 12);
    CHECK_THROWS_AS(multiplicity(facets, poly({1, 7, 3})), VerificationFailure);
}

TEST_CASE("checked series against interior faces")
{
    auto inst = fixtures::double_example();
    auto facets = enumerate_facets(inst);
    auto table = f_vector(inst, {32, true});
    interior_faces(inst, table, facets);
    CHECK(hilbert_series_checked(inst, poly({1, 7, 4}), table).render() == "(1+7t+4t^2)/(1-t)^5");
    CHECK_THROWS_AS(hilbert_series_checked(inst, poly({1, 8, 3}), table), VerificationFailure);
}

TEST_CASE("Gorenstein hint")
{
    CHECK(gorenstein_hint(poly({1, 7, 19, 19, 7, 1})));
    CHECK_FALSE(gorenstein_hint(poly({1, 7, 4})));
    CHECK(gorenstein_hint(poly({1})));
}

TEST_CASE("polynomial helpers")
{
    CHECK(trimmed(poly({1, 2, 0, 0})) == poly({1, 2}));
    CHECK(trimmed(poly({0, 0})) == poly({0}));
    BigInt big = 1;
    for (int i = 0; i < 80; ++i) big *= 2;
    CHECK(to_string(big) == "1208925819614629174706176");
}

TEST_CASE("h routes agree on random instances")
{
    std::mt19937_64 rng(41);
    for (int t = 0; t < 40; ++t) {
        auto inst = random_instance(rng, 14);
        auto facets = enumerate_facets(inst);
        auto h = all_routes(inst);
        BigInt sum = 0;
        for (const auto& c : h) sum += c;
        CHECK(sum == BigInt(facets.size()));
        for (const auto& c : h) CHECK(c >= 0);
    }
}
