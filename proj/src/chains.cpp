#include "bdi/chains.hpp"

#include <algorithm>

#include "bdi/error.hpp"

namespace bdi {

int max_diagonal_chain(std::vector<Point> points)
{
    // Descending y among equal x keeps two points of one row out of the same
    // strictly increasing run.
    std::sort(points.begin(), points.end(),
              [](const Point& p, const Point& q) { return p.x != q.x ? p.x < q.x : p.y > q.y; });
    std::vector<int> tails;
    for (const auto& p : points) {
        auto it = std::lower_bound(tails.begin(), tails.end(), p.y);
        if (it == tails.end())
            tails.push_back(p.y);
        else
            *it = p.y;
    }
    return static_cast<int>(tails.size());
}

std::vector<Point> view_points(const Instance& instance, const CellSet& set, int vertex)
{
    const Side side = instance.vertex(vertex).side;
    std::vector<Point> out;
    for (int idx : set.indices()) {
        if (instance.owner(idx, side) != vertex) continue;
        auto p = instance.view_pos(idx, side);
        out.push_back({p.x, p.y});
    }
    return out;
}

bool is_u_compatible(const Instance& instance, const CellSet& set)
{
    for (int g = 0; g < instance.vertex_count(); ++g) {
        if (max_diagonal_chain(view_points(instance, set, g)) > instance.vertex(g).u) return false;
    }
    return true;
}

namespace {

struct Quadrants {
    int nw = 0;
    int se = 0;
};

Quadrants quadrant_chains(const std::vector<Point>& points, ViewPos pos)
{
    std::vector<Point> nw, se;
    for (const auto& p : points) {
        if (p.x < pos.x && p.y < pos.y) nw.push_back(p);
        if (p.x > pos.x && p.y > pos.y) se.push_back(p);
    }
    return {max_diagonal_chain(std::move(nw)), max_diagonal_chain(std::move(se))};
}

SideStats stats_at(const BlockView& view, const std::vector<Point>& points, ViewPos pos)
{
    auto q = quadrant_chains(points, pos);
    const int a = view.rows;
    const int b = view.cols;
    const int u = view.u;
    SideStats st;
    st.r = q.nw;
    st.s = q.se;
    st.r_bar = std::max(st.r, std::min(pos.x - 1, u - 1 - std::min(a - pos.x, b - pos.y)));
    st.s_bar = std::max(st.s, std::min(a - pos.x, u - std::min(pos.x, pos.y)));
    return st;
}

}  // namespace

SideStats view_stats(const Instance& instance, const CellSet& set, int vertex, ViewPos pos)
{
    return stats_at(instance.view(vertex), view_points(instance, set, vertex), pos);
}

std::vector<SideStats> view_stats_grid(const Instance& instance, const CellSet& set, int vertex)
{
    const auto& view = instance.view(vertex);
    auto points = view_points(instance, set, vertex);
    std::vector<SideStats> out;
    out.reserve(view.grid.size());
    for (int x = 1; x <= view.rows; ++x)
        for (int y = 1; y <= view.cols; ++y) out.push_back(stats_at(view, points, {x, y}));
    return out;
}

ChainStats corner_stats(const Instance& instance, const CellSet& set, int cell_index)
{
    ChainStats out;
    for (Side side : {Side::target, Side::source}) {
        int g = instance.owner(cell_index, side);
        auto st = view_stats(instance, set, g, instance.view_pos(cell_index, side));
        (side == Side::target ? out.target : out.source) = st;
    }
    return out;
}

ChainStats corner_stats(const Instance& instance, const CellSet& set, const Cell& cell)
{
    return corner_stats(instance, set, instance.index(cell));
}

bool can_extend(const Instance& instance, const CellSet& set, int cell_index)
{
    if (set.test(cell_index)) throw PreconditionError("cell is already in the set");
    for (Side side : {Side::target, Side::source}) {
        int g = instance.owner(cell_index, side);
        auto q = quadrant_chains(view_points(instance, set, g), instance.view_pos(cell_index, side));
        if (q.nw + q.se >= instance.vertex(g).u) return false;
    }
    return true;
}

bool can_extend(const Instance& instance, const CellSet& set, const Cell& cell)
{
    return can_extend(instance, set, instance.index(cell));
}

}  // namespace bdi
