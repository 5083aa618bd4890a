#include <doctest.h>

#include <random>
#include <string>

#include "bdi/chains.hpp"
#include "bdi/error.hpp"
#include "bdi/ideal.hpp"
#include "bdi/moves.hpp"
#include "bdi/oracle.hpp"
#include "bdi/verify.hpp"
#include "support.hpp"

using namespace bdi;

namespace {

Instance two_by_two() { return parse_preset("double:2,2,2,1,1", BuildMode::strict); }

int count_occurrences(const std::string& text, const std::string& needle)
{
    int n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("natural generator counts")
{
    CHECK(natural_generator_count(two_by_two()) == 12);
    CHECK(natural_generator_count(parse_preset("secant:2,2,1", BuildMode::strict)) == 12);
    CHECK(natural_generator_count(fixtures::star_example()) == 29);
    CHECK(natural_generator_count(fixtures::single_cell()) == 0);
    CHECK(natural_generator_count(parse_preset("det:3,3,2", BuildMode::strict)) == 2);

    auto star = fixtures::star_example();
    CHECK(natural_generator_count(star, star.vertex_index("1")) == 20);
    CHECK(natural_generator_count(star, star.vertex_index("2")) == 3);

    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(2, 3) == 0);
}

TEST_CASE("minor and chain streams have equal lengths")
{
    for (const auto& inst : {two_by_two(), fixtures::star_example(), fixtures::double_example()}) {
        MinorStream minors(inst);
        ChainStream chains(inst);
        BigInt n = 0;
        while (auto m = minors.next()) {
            auto c = chains.next();
            REQUIRE(c.has_value());
            const auto& vx = inst.vertex(m->vertex);
            CHECK(m->rows.size() == static_cast<std::size_t>(vx.u + 1));
            CHECK(m->cells.size() == m->rows.size() * m->cols.size());
            CHECK(c->powers.size() == m->rows.size());
            CHECK_FALSE(is_u_compatible(inst, c->support(inst.cell_count())));
            ++n;
        }
        CHECK_FALSE(chains.next().has_value());
        CHECK(n == natural_generator_count(inst));
    }
}

TEST_CASE("leading monomial of the 2x2 minor")
{
    auto inst = two_by_two();
    ChainStream chains(inst);
    auto first = chains.next();
    REQUIRE(first.has_value());
    auto expected = fixtures::cells(inst, {{1, 1, 1}, {2, 2, 1}});
    CHECK(first->support(inst.cell_count()) == expected);
}

TEST_CASE("membership examples")
{
    auto inst = two_by_two();
    auto facets = enumerate_facets(inst);
    auto diag = Monomial::squarefree(fixtures::cells(inst, {{1, 1, 1}, {2, 2, 1}}));
    CHECK(in_initial_ideal_by_generators(inst, diag));
    CHECK(in_initial_ideal_by_facets(facets, diag, inst.cell_count()));
    CHECK(in_initial_ideal(inst, facets, diag));

    auto anti = Monomial::squarefree(fixtures::cells(inst, {{1, 2, 1}, {2, 1, 1}}));
    CHECK_FALSE(in_initial_ideal(inst, facets, anti));
    CHECK_FALSE(in_initial_ideal(inst, facets, Monomial::squarefree(CellSet(inst.cell_count()))));

    Monomial squared;
    squared.powers = {{0, 2}, {3, 1}};
    CHECK(squared.support(inst.cell_count()) == CellSet::from_indices(inst.cell_count(), {0, 3}));
}

TEST_CASE("membership routes agree on every squarefree monomial")
{
    std::mt19937_64 rng(43);
    for (int t = 0; t < 12; ++t) {
        auto inst = random_instance(rng, 12);
        auto facets = enumerate_facets(inst);
        const int n = inst.cell_count();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            std::vector<int> idx;
            for (int b = 0; b < n; ++b)
                if (mask >> b & 1U) idx.push_back(b);
            auto mono = Monomial::squarefree(CellSet::from_indices(n, idx));
            bool a = in_initial_ideal_by_generators(inst, mono);
            bool b = in_initial_ideal_by_facets(facets, mono, n);
            REQUIRE(a == b);
        }
    }
}

TEST_CASE("script export")
{
    auto inst = two_by_two();
    auto m2 = export_cas(inst, CasFlavor::m2);
    CHECK(m2 == export_cas(inst, CasFlavor::m2));
    CHECK(count_occurrences(m2, "det matrix") == 12);
    CHECK(m2.find("x_1_1_1") != std::string::npos);
    CHECK(m2.find("x_2_2_2") != std::string::npos);
    CHECK(m2.find("Lex") != std::string::npos);

    auto sing = export_cas(inst, CasFlavor::singular);
    CHECK(sing == export_cas(inst, CasFlavor::singular));
    CHECK(sing.find("lp") != std::string::npos);

    auto star = export_cas(fixtures::star_example(), CasFlavor::m2);
    CHECK(count_occurrences(star, "det matrix") == 29);
    CHECK(star.find("x_3_2_3") != std::string::npos);

    CHECK(variable_name({1, 2, 3}) == "x_1_2_3");

    ExportOptions small;
    small.generator_cap = 10;
    CHECK_THROWS_AS(export_cas(inst, CasFlavor::m2, small), ResourceLimit);
}
