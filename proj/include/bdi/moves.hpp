#pragma once

#include <cstddef>
#include <vector>

#include "bdi/cell_set.hpp"
#include "bdi/quiver.hpp"
#include "bdi/vertex_map.hpp"

namespace bdi {

/// Swap of one member for one non-member inside a 2 x r rectangle (r >= 2) of
/// a block. Horizontal moves live in target blocks, vertical ones in source
/// blocks; `first` and `length` describe the rectangle in view coordinates,
/// with the NW corner at `first` and `length` = r.
struct ChuteMove {
    Orientation direction = Orientation::horizontal;
    int vertex = 0;
    int removed = 0;
    int added = 0;
    ViewPos first;
    int length = 0;
};

/// All chute moves, one per distinct (removed, added) pair.
std::vector<ChuteMove> chutable_moves(const Instance& instance, const CellSet& facet);

/// The reverse swaps: drop the NW corner, fill the SE corner.
std::vector<ChuteMove> inverse_chutable_moves(const Instance& instance, const CellSet& facet);

/// Re-checks the rectangle against the set before swapping.
CellSet apply_move(const Instance& instance, const CellSet& facet, const ChuteMove& move);
CellSet apply_inverse_move(const Instance& instance, const CellSet& facet, const ChuteMove& move);

struct EnumerationOptions {
    std::size_t facet_cap = 10'000'000;
    int threads = 1;
};

/// Every facet, sorted ascending under the set order.
std::vector<CellSet> enumerate_facets(const Instance& instance, const EnumerationOptions& options = {});

}  // namespace bdi
