#pragma once

#include <cstdint>
#include <vector>

#include "bdi/cell_set.hpp"
#include "bdi/quiver.hpp"

// Slow reference implementations. They work from the definitions in block
// coordinates and share no algorithm with the main library.
namespace bdi::oracle {

struct Pt {
    int row = 0;
    int col = 0;
};

/// Longest strictly increasing chain by trying every subset; n <= 20.
int exhaustive_chain(const std::vector<Pt>& points);
/// Quadratic dynamic programme for the same quantity.
int quadratic_chain(const std::vector<Pt>& points);

bool compatible(const Instance& instance, const CellSet& set);

/// All faces, by size (index = number of cells).
std::vector<std::uint64_t> face_counts(const Instance& instance);

/// Maximal compatible sets, sorted ascending under the set order.
std::vector<CellSet> maximal_sets(const Instance& instance);

/// Interior face counts by size, using facets to find the boundary: a
/// codimension-one face on the boundary lies in exactly one facet.
std::vector<std::uint64_t> interior_counts(const Instance& instance, const std::vector<CellSet>& facets);

struct Barred {
    int r_bar = 0;
    int s_bar = 0;
};

/// Padded-set chain statistics of a cell on its target block and on its
/// source block. The SE statistic is obtained by rotating the block.
Barred padded_target(const Instance& instance, const CellSet& set, const Cell& cell);
Barred padded_source(const Instance& instance, const CellSet& set, const Cell& cell);

}  // namespace bdi::oracle
