#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace bdi {

struct Arrow {
    std::string from;
    std::string to;
    friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Sources, targets and an ordered arrow list; arrow position k (1-based) is
/// the page index of the variables carried by that arrow.
struct BipartiteQuiver {
    std::vector<std::string> sources;
    std::vector<std::string> targets;
    std::vector<Arrow> arrows;
    friend bool operator==(const BipartiteQuiver&, const BipartiteQuiver&) = default;
};

enum class Side : unsigned char { source, target };
enum class BuildMode { strict, normalize };

/// Lattice point (i, j, k): row i and column j of page k, all 1-based.
struct Cell {
    int i = 0;
    int j = 0;
    int k = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
};

/// Page first, then row, then column.
std::strong_ordering cmp_t(const Cell& lhs, const Cell& rhs);

/// Position inside a block matrix A_gamma (1-based row/col).
struct BlockPos {
    std::string vertex;
    int row = 0;
    int col = 0;
    friend bool operator==(const BlockPos&, const BlockPos&) = default;
};

struct RankClamp {
    std::string vertex;
    int from = 0;
    int to = 0;
};

struct RemovedArrow {
    std::size_t input_index = 0;  // 0-based position in the input arrow list
    Arrow arrow;
    int rows = 0;
    int cols = 0;
};

/// What normalization changed. Every variable on a removed arrow becomes a
/// generator of the ideal on its own.
struct NormalizationReport {
    std::vector<RankClamp> clamps;
    std::vector<std::string> removed_vertices;
    std::vector<RemovedArrow> removed_arrows;

    bool changed() const { return !clamps.empty() || !removed_vertices.empty(); }
    std::size_t removed_variable_count() const;
};

struct VertexInfo {
    std::string id;
    Side side = Side::source;
    int m = 0;
    int u = 0;
    int a = 0;  // rows of A_gamma
    int b = 0;  // columns of A_gamma
    int v = 0;  // sum of ranks across incident arrows
    std::vector<int> arrows;  // 0-based incident arrow indices, ascending
};

struct ArrowInfo {
    int source = 0;  // vertex index
    int target = 0;  // vertex index
    int rows = 0;    // m of the target
    int cols = 0;    // m of the source
    int first_cell = 0;
    int col_offset = 0;  // columns of earlier pages inside A_target
    int row_offset = 0;  // rows of earlier pages inside A_source
};

/// A block matrix oriented so that its own paths run west to east.
///
/// Target blocks are taken as they are. Source blocks are transposed, which
/// turns their vertical paths into horizontal ones and stacks pages left to
/// right in arrow order. Chains, quadrants, NW/SE corners and chute
/// rectangles are all invariant under this transpose, so every per-block
/// algorithm is written once against this view.
struct BlockView {
    int vertex = 0;
    Side side = Side::source;
    int rows = 0;
    int cols = 0;
    int u = 0;
    int v = 0;
    std::vector<int> arrows;           // pages, left to right
    std::vector<int> page_col_offset;  // parallel to arrows
    std::vector<int> grid;             // rows*cols global cell indices, row-major

    int at(int x, int y) const { return grid[static_cast<std::size_t>((x - 1) * cols + (y - 1))]; }
};

struct ViewPos {
    int x = 0;
    int y = 0;
    friend bool operator==(const ViewPos&, const ViewPos&) = default;
};

/// Validated quiver with dimension and rank vectors and all derived block
/// geometry. Immutable once built.
class Instance {
public:
    const BipartiteQuiver& quiver() const { return quiver_; }
    const std::map<std::string, int>& m() const { return m_; }
    const std::map<std::string, int>& u() const { return u_; }
    const NormalizationReport& normalization() const { return report_; }

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    const VertexInfo& vertex(int index) const { return vertices_.at(static_cast<std::size_t>(index)); }
    int vertex_index(const std::string& id) const;

    int arrow_count() const { return static_cast<int>(arrows_.size()); }
    const ArrowInfo& arrow(int index) const { return arrows_.at(static_cast<std::size_t>(index)); }

    /// |L|
    int cell_count() const { return cell_count_; }
    /// N: the common cardinality of all facets.
    int facet_size() const { return facet_size_; }

    /// Cells are indexed by their rank under the page/row/column order.
    Cell cell(int index) const;
    int index(const Cell& c) const;
    bool contains(const Cell& c) const;

    BlockPos phi_target(const Cell& c) const;
    BlockPos phi_source(const Cell& c) const;
    Cell target_cell(const std::string& vertex, int row, int col) const;
    Cell source_cell(const std::string& vertex, int row, int col) const;

    const BlockView& view(int vertex) const { return views_.at(static_cast<std::size_t>(vertex)); }
    /// Vertex whose view contains the cell on the given side.
    int owner(int cell_index, Side side) const;
    ViewPos view_pos(int cell_index, Side side) const;

    friend bool operator==(const Instance& lhs, const Instance& rhs)
    {
        return lhs.quiver_ == rhs.quiver_ && lhs.m_ == rhs.m_ && lhs.u_ == rhs.u_;
    }

private:
    friend Instance build_instance(const BipartiteQuiver&, const std::map<std::string, int>&,
                                   const std::map<std::string, int>&, BuildMode);
    Instance() = default;
    void derive();

    BipartiteQuiver quiver_;
    std::map<std::string, int> m_;
    std::map<std::string, int> u_;
    NormalizationReport report_;

    std::vector<VertexInfo> vertices_;
    std::map<std::string, int> vertex_index_;
    std::vector<ArrowInfo> arrows_;
    std::vector<BlockView> views_;
    std::vector<ViewPos> target_pos_;
    std::vector<ViewPos> source_pos_;
    int cell_count_ = 0;
    int facet_size_ = 0;
};

/// Validates the data and derives block geometry.
///
/// Strict mode rejects anything outside 0 < u <= min(a, b), u <= v. Normalize
/// mode clamps u to min(a, b, v) and drops vertices whose rank reaches zero
/// together with their arrows, repeating until nothing changes.
Instance build_instance(const BipartiteQuiver& quiver, const std::map<std::string, int>& m,
                        const std::map<std::string, int>& u, BuildMode mode);

/// N = sum_k u_s u_t + sum_targets u(a - u) + sum_sources u(b - u).
int n_cells(const Instance& instance);

}  // namespace bdi
