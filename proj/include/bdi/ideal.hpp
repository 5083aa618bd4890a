#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bdi/cell_set.hpp"
#include "bdi/quiver.hpp"
#include "bdi/series.hpp"

namespace bdi {

/// A (u+1)-minor of one block: increasing row and column index lists in
/// block coordinates, and the participating cells in row-major order.
struct MinorSpec {
    int vertex = 0;
    std::vector<int> rows;
    std::vector<int> cols;
    std::vector<int> cells;  // rows.size() * cols.size()

    int cell_at(std::size_t r, std::size_t c) const { return cells[r * cols.size() + c]; }
};

/// Cell indices with positive exponents, sorted by cell.
struct Monomial {
    std::vector<std::pair<int, int>> powers;

    static Monomial squarefree(const CellSet& support);
    CellSet support(int universe) const;
};

/// Streams every (u+1)-minor of every block, block by block.
class MinorStream {
public:
    explicit MinorStream(const Instance& instance);
    std::optional<MinorSpec> next();

private:
    bool advance_block();

    const Instance* instance_;
    int vertex_ = -1;
    std::vector<int> rows_;
    std::vector<int> cols_;
    bool fresh_ = false;
};

/// Streams the leading monomials: the main diagonal of every minor, which is
/// a diagonal chain of length u+1.
class ChainStream {
public:
    explicit ChainStream(const Instance& instance) : minors_(instance) {}
    std::optional<Monomial> next();

private:
    MinorStream minors_;
};

/// (row, col) of a block position to its cell, in block-matrix coordinates.
int block_cell(const Instance& instance, int vertex, int row, int col);

BigInt binomial(int n, int k);
BigInt natural_generator_count(const Instance& instance);
BigInt natural_generator_count(const Instance& instance, int vertex);

/// Membership in the initial ideal because the support holds a long chain.
bool in_initial_ideal_by_generators(const Instance& instance, const Monomial& mono);
/// Membership because the support fits in no facet.
bool in_initial_ideal_by_facets(const std::vector<CellSet>& facets, const Monomial& mono, int universe);
/// Both routes; throws VerificationFailure if they disagree.
bool in_initial_ideal(const Instance& instance, const std::vector<CellSet>& facets, const Monomial& mono);

enum class CasFlavor { m2, singular };

struct ExportOptions {
    std::uint64_t generator_cap = 100'000;
    std::string version = "bdi 1.0";
};

/// Variable name used in exported scripts.
std::string variable_name(const Cell& c);

/// Script declaring the ring, the natural generators and the commands that
/// compute the initial ideal and the Hilbert series.
std::string export_cas(const Instance& instance, CasFlavor flavor, const ExportOptions& options = {});

}  // namespace bdi
