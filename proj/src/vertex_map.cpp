#include "bdi/vertex_map.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "bdi/chains.hpp"
#include "bdi/error.hpp"

namespace bdi {

namespace {

Side other(Side s) { return s == Side::target ? Side::source : Side::target; }

std::size_t slot(const BlockView& view, ViewPos p)
{
    return static_cast<std::size_t>((p.x - 1) * view.cols + (p.y - 1));
}

/// Paths of one view plus, for every view position, the 1-based number of the
/// path through it (0 when none).
struct ViewPaths {
    std::vector<std::vector<ViewPos>> paths;
    std::vector<int> label;
};

ViewPaths assemble(const Instance& instance, const CellSet& facet, int g)
{
    const auto& view = instance.view(g);
    auto stats = view_stats_grid(instance, facet, g);
    ViewPaths out;
    out.paths.resize(static_cast<std::size_t>(view.u));
    out.label.assign(view.grid.size(), 0);
    for (int x = 1; x <= view.rows; ++x) {
        for (int y = 1; y <= view.cols; ++y) {
            const auto& st = stats[slot(view, {x, y})];
            int p = st.r_bar + 1;
            if (p >= 1 && p <= view.u && st.s_bar == view.u - p) {
                out.paths[static_cast<std::size_t>(p - 1)].push_back({x, y});
                out.label[slot(view, {x, y})] = p;
            }
        }
    }
    for (int p = 1; p <= view.u; ++p) {
        auto& path = out.paths[static_cast<std::size_t>(p - 1)];
        std::sort(path.begin(), path.end(),
                  [](const ViewPos& l, const ViewPos& r) { return l.y != r.y ? l.y < r.y : l.x > r.x; });
        auto fail = [&](const char* why) {
            std::ostringstream os;
            os << "path " << p << " of vertex '" << instance.vertex(g).id << "' " << why;
            throw VerificationFailure(os.str());
        };
        if (path.empty()) fail("is empty");
        if (!(path.front() == ViewPos{view.rows - view.u + p, 1})) fail("starts at the wrong point");
        if (!(path.back() == ViewPos{p, view.cols})) fail("ends at the wrong point");
        for (std::size_t t = 1; t < path.size(); ++t) {
            int dx = path[t].x - path[t - 1].x;
            int dy = path[t].y - path[t - 1].y;
            if (!((dx == -1 && dy == 0) || (dx == 0 && dy == 1))) fail("is not a lattice path");
        }
    }
    return out;
}

std::vector<ViewPaths> assemble_all(const Instance& instance, const CellSet& facet)
{
    std::vector<ViewPaths> out;
    for (int g = 0; g < instance.vertex_count(); ++g) out.push_back(assemble(instance, facet, g));
    return out;
}

bool on_other_side(const Instance& instance, const std::vector<ViewPaths>& all, int cell, Side side)
{
    int h = instance.owner(cell, side);
    return all[static_cast<std::size_t>(h)].label[slot(instance.view(h), instance.view_pos(cell, side))] != 0;
}

bool is_nw(const std::vector<ViewPos>& path, std::size_t t)
{
    if (t == 0 || t + 1 >= path.size()) return false;
    const auto& r = path[t];
    return path[t - 1] == ViewPos{r.x + 1, r.y} && path[t + 1] == ViewPos{r.x, r.y + 1};
}

bool is_se(const std::vector<ViewPos>& path, std::size_t t)
{
    if (t == 0 || t + 1 >= path.size()) return false;
    const auto& r = path[t];
    return path[t - 1] == ViewPos{r.x, r.y - 1} && path[t + 1] == ViewPos{r.x - 1, r.y};
}

/// Labels 1..v of the other side's paths as they cross this view, numbered
/// page by page in arrow order.
std::vector<int> crossing_labels(const Instance& instance, const std::vector<ViewPaths>& all, int g)
{
    const auto& view = instance.view(g);
    const Side far = other(view.side);
    std::vector<int> out(view.grid.size(), 0);
    int offset = 0;
    for (std::size_t t = 0; t < view.arrows.size(); ++t) {
        const auto& ar = instance.arrow(view.arrows[t]);
        int h = view.side == Side::target ? ar.source : ar.target;
        int width = view.side == Side::target ? ar.cols : ar.rows;
        int first = view.page_col_offset[t] + 1;
        for (int x = 1; x <= view.rows; ++x) {
            for (int y = first; y < first + width; ++y) {
                int cell = view.at(x, y);
                int lab = all[static_cast<std::size_t>(h)].label[slot(instance.view(h), instance.view_pos(cell, far))];
                if (lab != 0) out[slot(view, {x, y})] = offset + lab;
            }
        }
        offset += instance.view(h).u;
    }
    return out;
}

/// Essential NW corner cells split by orientation: [0] horizontal, [1] vertical.
std::array<CellSet, 2> essential_nw_by_orientation(const Instance& instance, const std::vector<ViewPaths>& all)
{
    std::array<CellSet, 2> out{CellSet(instance.cell_count()), CellSet(instance.cell_count())};
    for (int g = 0; g < instance.vertex_count(); ++g) {
        const auto& view = instance.view(g);
        const auto& vp = all[static_cast<std::size_t>(g)];
        auto cross = crossing_labels(instance, all, g);
        auto& dest = out[view.side == Side::target ? 0 : 1];
        for (int p = 1; p <= view.u; ++p) {
            const auto& path = vp.paths[static_cast<std::size_t>(p - 1)];
            const int q = p + view.v - view.u;
            int anchor = -1;
            for (std::size_t t = path.size(); t-- > 0;) {
                if (cross[slot(view, path[t])] == q) {
                    anchor = static_cast<int>(t);
                    break;
                }
            }
            if (anchor < 0) throw VerificationFailure("a primary path misses its crossing partner");
            for (std::size_t t = 0; t < path.size(); ++t) {
                if (is_nw(path, t) && static_cast<int>(t) != anchor) dest.set(view.at(path[t].x, path[t].y));
            }
        }
    }
    return out;
}

void require_cvm(const Instance& instance, const CellSet& set)
{
    if (!is_cvm(instance, set)) throw PreconditionError("set is not a concurrent vertex map");
}

}  // namespace

std::vector<std::pair<int, int>> PathFamily::block_path(int p) const
{
    std::vector<std::pair<int, int>> out;
    for (const auto& v : view_paths.at(static_cast<std::size_t>(p))) {
        out.emplace_back(side == Side::target ? std::pair{v.x, v.y} : std::pair{v.y, v.x});
    }
    return out;
}

bool chain_membership_holds(const Instance& instance, const CellSet& set)
{
    for (int idx = 0; idx < instance.cell_count(); ++idx) {
        auto st = corner_stats(instance, set, idx);
        bool room = st.target.r + st.target.s < instance.vertex(instance.owner(idx, Side::target)).u &&
                    st.source.r + st.source.s < instance.vertex(instance.owner(idx, Side::source)).u;
        if (room != set.test(idx)) return false;
    }
    return true;
}

bool padded_membership_holds(const Instance& instance, const CellSet& set)
{
    for (int idx = 0; idx < instance.cell_count(); ++idx) {
        auto st = corner_stats(instance, set, idx);
        int ut = instance.vertex(instance.owner(idx, Side::target)).u;
        int us = instance.vertex(instance.owner(idx, Side::source)).u;
        int t = st.target.r_bar + st.target.s_bar;
        int s = st.source.r_bar + st.source.s_bar;
        if (t != ut - 1 && t != ut) return false;
        if (s != us - 1 && s != us) return false;
        if ((t == ut - 1 && s == us - 1) != set.test(idx)) return false;
    }
    return true;
}

bool is_cvm(const Instance& instance, const CellSet& set)
{
    if (set.universe() != instance.cell_count()) return false;
    bool result = set.count() == instance.facet_size() && is_u_compatible(instance, set);
#ifndef NDEBUG
    if (result != chain_membership_holds(instance, set))
        throw VerificationFailure("facet characterizations disagree");
#endif
    return result;
}

namespace {

CellSet greedy(const Instance& instance, const CellSet& seed, bool descending)
{
    if (seed.universe() != instance.cell_count()) throw PreconditionError("set belongs to another lattice");
    if (!is_u_compatible(instance, seed)) throw PreconditionError("seed set is not u-compatible");
    CellSet out = seed;
    const int n = instance.cell_count();
    for (int t = 0; t < n; ++t) {
        int idx = descending ? n - 1 - t : t;
        if (!out.test(idx) && can_extend(instance, out, idx)) out.set(idx);
    }
    return out;
}

}  // namespace

CellSet c_max(const Instance& instance, const CellSet& seed) { return greedy(instance, seed, true); }
CellSet c_min(const Instance& instance, const CellSet& seed) { return greedy(instance, seed, false); }

CellSet initial_cvm(const Instance& instance)
{
    CellSet out(instance.cell_count());
    for (int k = 0; k < instance.arrow_count(); ++k) {
        const auto& ar = instance.arrow(k);
        const auto& tgt = instance.vertex(ar.target);
        const auto& src = instance.vertex(ar.source);
        int later_into_target = 0;
        int later_out_of_source = 0;
        for (int l = k + 1; l < instance.arrow_count(); ++l) {
            const auto& other_arrow = instance.arrow(l);
            if (other_arrow.target == ar.target) later_into_target += instance.vertex(other_arrow.source).u;
            if (other_arrow.source == ar.source) later_out_of_source += instance.vertex(other_arrow.target).u;
        }
        int target_cols = std::max(0, tgt.u - later_into_target);
        int source_rows = std::max(0, src.u - later_out_of_source);
        for (int i = 1; i <= ar.rows; ++i) {
            for (int j = 1; j <= ar.cols; ++j) {
                bool in_target = i > ar.rows - tgt.u || j > ar.cols - target_cols;
                bool in_source = i > ar.rows - source_rows || j > ar.cols - src.u;
                if (in_target && in_source) out.set(ar.first_cell + (i - 1) * ar.cols + (j - 1));
            }
        }
    }
    return out;
}

RoadMap road_map(const Instance& instance, const CellSet& facet)
{
    require_cvm(instance, facet);
    auto all = assemble_all(instance, facet);

    for (int g = 0; g < instance.vertex_count(); ++g) {
        const auto& view = instance.view(g);
        const Side far = other(view.side);
        for (const auto& path : all[static_cast<std::size_t>(g)].paths) {
            for (std::size_t t = 0; t < path.size(); ++t) {
                if (!is_nw(path, t) && !is_se(path, t)) continue;
                if (!on_other_side(instance, all, view.at(path[t].x, path[t].y), far))
                    throw VerificationFailure("road map is not straight");
            }
        }
    }
    for (int idx = 0; idx < instance.cell_count(); ++idx) {
        bool both = on_other_side(instance, all, idx, Side::target) && on_other_side(instance, all, idx, Side::source);
        if (both != facet.test(idx)) throw VerificationFailure("road map does not reproduce the facet");
    }

    RoadMap out;
    for (int g = 0; g < instance.vertex_count(); ++g) {
        const auto& view = instance.view(g);
        PathFamily fam;
        fam.vertex = g;
        fam.side = view.side;
        fam.view_paths = std::move(all[static_cast<std::size_t>(g)].paths);
        for (const auto& path : fam.view_paths) {
            std::vector<int> cells;
            for (const auto& v : path) cells.push_back(view.at(v.x, v.y));
            fam.cells.push_back(std::move(cells));
        }
        out.families.push_back(std::move(fam));
    }
    return out;
}

CellSet essential_nw_cells(const Instance& instance, const CellSet& facet)
{
    require_cvm(instance, facet);
    auto by = essential_nw_by_orientation(instance, assemble_all(instance, facet));
    return by[0] | by[1];
}

CornerReport corners(const Instance& instance, const CellSet& facet)
{
    require_cvm(instance, facet);
    auto all = assemble_all(instance, facet);
    auto nw = essential_nw_by_orientation(instance, all);

    auto [mirror, mirrored] = reflect(instance, facet);
    auto mirror_nw = essential_nw_by_orientation(mirror, assemble_all(mirror, mirrored));

    CornerReport report;
    CellSet nw_cells(instance.cell_count());
    CellSet se_cells(instance.cell_count());
    for (int g = 0; g < instance.vertex_count(); ++g) {
        const auto& view = instance.view(g);
        const int o = view.side == Side::target ? 0 : 1;
        const auto orientation = o == 0 ? Orientation::horizontal : Orientation::vertical;
        for (const auto& path : all[static_cast<std::size_t>(g)].paths) {
            for (std::size_t t = 0; t < path.size(); ++t) {
                int cell = view.at(path[t].x, path[t].y);
                if (is_nw(path, t)) {
                    bool ess = nw[static_cast<std::size_t>(o)].test(cell);
                    report.corners.push_back({cell, CornerKind::nw, orientation, ess});
                    if (ess) nw_cells.set(cell);
                } else if (is_se(path, t)) {
                    bool ess = mirror_nw[static_cast<std::size_t>(o)].test(reflect_cell(instance, cell));
                    report.corners.push_back({cell, CornerKind::se, orientation, ess});
                    if (ess) se_cells.set(cell);
                }
            }
        }
    }
    report.essential_nw = nw_cells.count();
    report.essential_se = se_cells.count();
    return report;
}

Instance reflect(const Instance& instance)
{
    BipartiteQuiver q = instance.quiver();
    std::reverse(q.arrows.begin(), q.arrows.end());
    return build_instance(q, instance.m(), instance.u(), BuildMode::strict);
}

int reflect_cell(const Instance& instance, int cell_index)
{
    // Reversing pages and rotating each page reverses the whole cell order.
    return instance.cell_count() - 1 - cell_index;
}

CellSet reflect_set(const Instance& instance, const Instance& reflected, const CellSet& set)
{
    CellSet out(reflected.cell_count());
    for (int idx : set.indices()) out.set(reflect_cell(instance, idx));
    return out;
}

std::pair<Instance, CellSet> reflect(const Instance& instance, const CellSet& set)
{
    Instance mirror = reflect(instance);
    CellSet image = reflect_set(instance, mirror, set);
    return {std::move(mirror), std::move(image)};
}

}  // namespace bdi
