#pragma once

#include <vector>

#include "bdi/cell_set.hpp"
#include "bdi/quiver.hpp"

namespace bdi {

struct Point {
    int x = 0;
    int y = 0;
};

/// Longest sequence strictly increasing in both coordinates, O(n log n).
int max_diagonal_chain(std::vector<Point> points);

/// No block contains a diagonal chain longer than its rank.
bool is_u_compatible(const Instance& instance, const CellSet& set);

/// Whether adding the cell keeps the set compatible. The cell must not be in
/// the set already.
bool can_extend(const Instance& instance, const CellSet& set, int cell_index);
bool can_extend(const Instance& instance, const CellSet& set, const Cell& cell);

struct SideStats {
    int r = 0;
    int s = 0;
    int r_bar = 0;
    int s_bar = 0;
};

/// Chain statistics of a cell with respect to a set, on the target block and
/// on the source block.
struct ChainStats {
    SideStats target;
    SideStats source;
};

ChainStats corner_stats(const Instance& instance, const CellSet& set, const Cell& cell);
ChainStats corner_stats(const Instance& instance, const CellSet& set, int cell_index);

/// Statistics of one view position against the set's points in that view.
SideStats view_stats(const Instance& instance, const CellSet& set, int vertex, ViewPos pos);

/// Statistics for every position of a view, row-major.
std::vector<SideStats> view_stats_grid(const Instance& instance, const CellSet& set, int vertex);

/// Points of the set inside one view, in view coordinates.
std::vector<Point> view_points(const Instance& instance, const CellSet& set, int vertex);

}  // namespace bdi
