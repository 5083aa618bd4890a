#pragma once

#include <algorithm>
#include <vector>

#include "bdi/cell_set.hpp"
#include "bdi/cli.hpp"
#include "bdi/quiver.hpp"

namespace fixtures {

using bdi::Cell;
using bdi::CellSet;
using bdi::Instance;

inline Instance double_example() { return bdi::parse_preset("double:2,3,2,1,1", bdi::BuildMode::strict); }
inline Instance star_example() { return bdi::parse_preset("star-example", bdi::BuildMode::strict); }
inline Instance classical_example() { return bdi::parse_preset("det:3,3,2", bdi::BuildMode::strict); }
inline Instance single_cell() { return bdi::parse_preset("det:1,1,1", bdi::BuildMode::strict); }

inline CellSet cells(const Instance& inst, const std::vector<Cell>& list) { return CellSet::from_cells(inst, list); }

/// The twelve facets of the double example, numbered from the largest down
/// (the decreasing shelling order).
inline std::vector<std::vector<Cell>> double_facets_figure_order()
{
    return {
        {{3, 2, 1}, {1, 2, 2}, {2, 2, 2}, {3, 1, 2}, {3, 2, 2}},
        {{3, 2, 1}, {1, 2, 2}, {2, 1, 2}, {2, 2, 2}, {3, 1, 2}},
        {{3, 2, 1}, {1, 1, 2}, {1, 2, 2}, {2, 1, 2}, {3, 1, 2}},
        {{3, 1, 1}, {3, 2, 1}, {1, 1, 2}, {2, 1, 2}, {3, 1, 2}},
        {{2, 2, 1}, {3, 2, 1}, {1, 2, 2}, {2, 1, 2}, {2, 2, 2}},
        {{2, 2, 1}, {3, 2, 1}, {1, 1, 2}, {1, 2, 2}, {2, 1, 2}},
        {{2, 2, 1}, {3, 1, 1}, {3, 2, 1}, {1, 1, 2}, {2, 1, 2}},
        {{2, 1, 1}, {2, 2, 1}, {3, 1, 1}, {1, 1, 2}, {2, 1, 2}},
        {{1, 2, 1}, {2, 2, 1}, {3, 2, 1}, {1, 1, 2}, {1, 2, 2}},
        {{1, 2, 1}, {2, 2, 1}, {3, 1, 1}, {3, 2, 1}, {1, 1, 2}},
        {{1, 2, 1}, {2, 1, 1}, {2, 2, 1}, {3, 1, 1}, {1, 1, 2}},
        {{1, 1, 1}, {1, 2, 1}, {2, 1, 1}, {3, 1, 1}, {1, 1, 2}},
    };
}

/// Cells where a chute move can put a new member, per figure facet.
inline std::vector<std::vector<Cell>> double_move_targets_figure_order()
{
    return {
        {{2, 1, 2}},
        {{2, 2, 1}, {1, 1, 2}},
        {{3, 1, 1}, {2, 2, 1}},
        {{2, 2, 1}},
        {{1, 1, 2}},
        {{3, 1, 1}, {1, 2, 1}},
        {{2, 1, 1}, {1, 2, 1}},
        {{1, 2, 1}},
        {{3, 1, 1}},
        {{2, 1, 1}},
        {{1, 1, 1}},
        {},
    };
}

/// The reference corner counts are read off a two-row drawing of the
/// facets whose top row holds facets 1-4, 7, 8 and bottom row 5, 6, 9-12.
inline const std::vector<int> double_layout{1, 2, 3, 4, 7, 8, 5, 6, 9, 10, 11, 12};
inline const std::vector<int> double_se_counts_layout{1, 2, 2, 1, 2, 1, 1, 2, 1, 1, 1, 0};
inline const std::vector<int> double_nw_counts_layout{0, 1, 1, 1, 2, 1, 1, 2, 1, 2, 2, 1};

/// Reorders a layout-ordered list by facet number.
inline std::vector<int> by_number(const std::vector<int>& layout_values)
{
    std::vector<int> out(layout_values.size());
    for (std::size_t i = 0; i < layout_values.size(); ++i)
        out[static_cast<std::size_t>(double_layout[i] - 1)] = layout_values[i];
    return out;
}

inline const std::vector<int> double_se_counts = by_number(double_se_counts_layout);
inline const std::vector<int> double_nw_counts = by_number(double_nw_counts_layout);

inline std::vector<CellSet> double_facets_ascending(const Instance& inst)
{
    std::vector<CellSet> out;
    for (const auto& f : double_facets_figure_order()) out.push_back(cells(inst, f));
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace fixtures
