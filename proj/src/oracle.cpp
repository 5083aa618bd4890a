#include "bdi/oracle.hpp"

#include <algorithm>
#include <map>

#include "bdi/error.hpp"

namespace bdi::oracle {

int exhaustive_chain(const std::vector<Pt>& points)
{
    const std::size_t n = points.size();
    if (n > 20) throw PreconditionError("exhaustive chain search is limited to 20 points");
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        std::vector<Pt> pick;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1U) pick.push_back(points[i]);
        bool chain = true;
        for (std::size_t i = 0; i < pick.size() && chain; ++i) {
            for (std::size_t j = 0; j < pick.size() && chain; ++j) {
                if (i == j) continue;
                bool below = pick[i].row < pick[j].row && pick[i].col < pick[j].col;
                bool above = pick[i].row > pick[j].row && pick[i].col > pick[j].col;
                chain = below || above;
            }
        }
        if (chain) best = std::max(best, static_cast<int>(pick.size()));
    }
    return best;
}

int quadratic_chain(const std::vector<Pt>& points)
{
    std::vector<Pt> p = points;
    std::sort(p.begin(), p.end(), [](const Pt& a, const Pt& b) { return a.row != b.row ? a.row < b.row : a.col < b.col; });
    std::vector<int> best(p.size(), 1);
    int out = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (p[j].row < p[i].row && p[j].col < p[i].col) best[i] = std::max(best[i], best[j] + 1);
        out = std::max(out, best[i]);
    }
    return out;
}

namespace {

std::map<std::string, std::vector<Pt>> block_points(const Instance& instance, const CellSet& set)
{
    std::map<std::string, std::vector<Pt>> out;
    for (int idx : set.indices()) {
        Cell c = instance.cell(idx);
        auto t = instance.phi_target(c);
        auto s = instance.phi_source(c);
        out[t.vertex].push_back({t.row, t.col});
        out[s.vertex].push_back({s.row, s.col});
    }
    return out;
}

struct Walk {
    std::vector<std::uint64_t> counts;
    std::vector<CellSet> faces;
    std::vector<CellSet> maximal;
    bool keep_faces = false;
};

void walk(const Instance& instance, CellSet& current, int size, int next, Walk& w)
{
    if (w.counts.size() <= static_cast<std::size_t>(size)) w.counts.resize(static_cast<std::size_t>(size) + 1, 0);
    w.counts[static_cast<std::size_t>(size)] += 1;
    if (w.keep_faces) w.faces.push_back(current);
    bool maximal = true;
    for (int idx = 0; idx < instance.cell_count(); ++idx) {
        if (current.test(idx)) continue;
        current.set(idx);
        bool ok = compatible(instance, current);
        if (ok) {
            maximal = false;
            if (idx >= next) walk(instance, current, size + 1, idx + 1, w);
        }
        current.reset(idx);
    }
    if (maximal) w.maximal.push_back(current);
}

Walk full_walk(const Instance& instance, bool keep_faces)
{
    if (instance.cell_count() > 24) throw ResourceLimit("brute-force oracle is limited to 24 cells");
    Walk w;
    w.keep_faces = keep_faces;
    CellSet current(instance.cell_count());
    walk(instance, current, 0, 0, w);
    return w;
}

/// Padded NW statistic of position (x, y) in a rows x cols block.
int padded_nw(const std::vector<Pt>& pts, int rows, int cols, int u, int x, int y)
{
    std::vector<Pt> all = pts;
    for (int t = 1; t <= u; ++t) {
        all.push_back({rows - u + t, -u + t});
        all.push_back({t, cols - u + t});
    }
    std::vector<Pt> quadrant;
    for (const auto& p : all)
        if (p.row <= x - 1 && p.col <= y - 1) quadrant.push_back(p);
    return quadratic_chain(quadrant);
}

Barred padded(std::vector<Pt> pts, int rows, int cols, int u, int x, int y)
{
    Barred b;
    b.r_bar = padded_nw(pts, rows, cols, u, x, y);
    for (auto& p : pts) p = {rows + 1 - p.row, cols + 1 - p.col};
    b.s_bar = padded_nw(pts, rows, cols, u, rows + 1 - x, cols + 1 - y);
    return b;
}

int vertex_u(const Instance& instance, const std::string& id) { return instance.u().at(id); }

}  // namespace

bool compatible(const Instance& instance, const CellSet& set)
{
    for (const auto& [id, pts] : block_points(instance, set))
        if (quadratic_chain(pts) > vertex_u(instance, id)) return false;
    return true;
}

std::vector<std::uint64_t> face_counts(const Instance& instance) { return full_walk(instance, false).counts; }

std::vector<CellSet> maximal_sets(const Instance& instance)
{
    auto out = full_walk(instance, false).maximal;
    std::sort(out.begin(), out.end(), [](const CellSet& a, const CellSet& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return cmp_t_sets(a, b) < 0;
    });
    return out;
}

std::vector<std::uint64_t> interior_counts(const Instance& instance, const std::vector<CellSet>& facets)
{
    auto w = full_walk(instance, true);
    const int n = facets.empty() ? 0 : facets.front().count();
    std::vector<CellSet> boundary;
    for (const auto& f : w.faces) {
        if (f.count() != n - 1) continue;
        int holders = 0;
        for (const auto& F : facets) holders += f.is_subset_of(F) ? 1 : 0;
        if (holders == 1) boundary.push_back(f);
    }
    std::vector<std::uint64_t> out(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& f : w.faces) {
        bool inside = std::none_of(boundary.begin(), boundary.end(), [&](const CellSet& b) { return f.is_subset_of(b); });
        if (inside) out[static_cast<std::size_t>(f.count())] += 1;
    }
    return out;
}

Barred padded_target(const Instance& instance, const CellSet& set, const Cell& cell)
{
    auto at = instance.phi_target(cell);
    const auto& vx = instance.vertex(instance.vertex_index(at.vertex));
    std::vector<Pt> pts;
    for (int idx : set.indices()) {
        auto p = instance.phi_target(instance.cell(idx));
        if (p.vertex == at.vertex) pts.push_back({p.row, p.col});
    }
    return padded(pts, vx.a, vx.b, vx.u, at.row, at.col);
}

Barred padded_source(const Instance& instance, const CellSet& set, const Cell& cell)
{
    // Source statistics read the block with rows and columns exchanged.
    auto at = instance.phi_source(cell);
    const auto& vx = instance.vertex(instance.vertex_index(at.vertex));
    std::vector<Pt> pts;
    for (int idx : set.indices()) {
        auto p = instance.phi_source(instance.cell(idx));
        if (p.vertex == at.vertex) pts.push_back({p.col, p.row});
    }
    return padded(pts, vx.b, vx.a, vx.u, at.col, at.row);
}

}  // namespace bdi::oracle
