#pragma once

#include <utility>
#include <vector>

#include "bdi/cell_set.hpp"
#include "bdi/quiver.hpp"

namespace bdi {

/// Lattice paths of one block, in block-matrix coordinates.
///
/// Target blocks carry horizontal paths from (a-u+p, 1) to (p, b); source
/// blocks carry vertical paths from (1, b-u+q) to (a, q). Each path lists its
/// vertices from the SW end to the NE end.
struct PathFamily {
    int vertex = 0;
    Side side = Side::target;
    std::vector<std::vector<ViewPos>> view_paths;
    std::vector<std::vector<int>> cells;

    /// (row, col) in A_gamma for every vertex of path p (0-based).
    std::vector<std::pair<int, int>> block_path(int p) const;
};

struct RoadMap {
    std::vector<PathFamily> families;  // one per vertex, vertex order
};

enum class CornerKind { nw, se };
enum class Orientation { horizontal, vertical };

struct Corner {
    int cell = 0;
    CornerKind kind = CornerKind::nw;
    Orientation orientation = Orientation::horizontal;
    bool essential = false;
};

struct CornerReport {
    std::vector<Corner> corners;
    /// Distinct cells that are an essential corner of at least one path.
    int essential_nw = 0;
    int essential_se = 0;
};

bool is_cvm(const Instance& instance, const CellSet& set);

/// A cell belongs to the set exactly when its plain chain counts leave room
/// on both sides. Holds precisely for facets.
bool chain_membership_holds(const Instance& instance, const CellSet& set);
/// The same test with the boundary-padded counts, which must additionally
/// sum to u-1 or u everywhere.
bool padded_membership_holds(const Instance& instance, const CellSet& set);

/// Greedy completion scanning cells from the largest down.
CellSet c_max(const Instance& instance, const CellSet& seed);
/// Greedy completion scanning cells from the smallest up.
CellSet c_min(const Instance& instance, const CellSet& seed);

/// The largest facet, built page by page without any search.
CellSet initial_cvm(const Instance& instance);

RoadMap road_map(const Instance& instance, const CellSet& facet);

CornerReport corners(const Instance& instance, const CellSet& facet);

/// Cells that are essential NW corners, without the SE pass.
CellSet essential_nw_cells(const Instance& instance, const CellSet& facet);

/// Instance with the arrow order reversed, every page rotated by 180 degrees.
Instance reflect(const Instance& instance);
/// Image of a set under the reflection, as a set over reflect(instance).
CellSet reflect_set(const Instance& instance, const Instance& reflected, const CellSet& set);
int reflect_cell(const Instance& instance, int cell_index);
std::pair<Instance, CellSet> reflect(const Instance& instance, const CellSet& set);

}  // namespace bdi
