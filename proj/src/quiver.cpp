#include "bdi/quiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "bdi/error.hpp"

namespace bdi {

std::strong_ordering cmp_t(const Cell& lhs, const Cell& rhs)
{
    if (auto c = lhs.k <=> rhs.k; c != 0) return c;
    if (auto c = lhs.i <=> rhs.i; c != 0) return c;
    return lhs.j <=> rhs.j;
}

std::size_t NormalizationReport::removed_variable_count() const
{
    std::size_t n = 0;
    for (const auto& r : removed_arrows) n += static_cast<std::size_t>(r.rows) * static_cast<std::size_t>(r.cols);
    return n;
}

namespace {

std::string describe(const Arrow& a) { return a.from + "->" + a.to; }

int lookup(const std::map<std::string, int>& values, const std::string& id, const char* what)
{
    auto it = values.find(id);
    if (it == values.end()) throw InvalidInstance(std::string("no ") + what + " value for vertex '" + id + "'");
    return it->second;
}

struct Geometry {
    std::map<std::string, int> a, b, v;
};

Geometry geometry(const std::vector<std::string>& sources, const std::vector<std::string>& targets,
                  const std::vector<Arrow>& arrows, const std::map<std::string, int>& m,
                  const std::map<std::string, int>& u)
{
    Geometry g;
    for (const auto& t : targets) {
        g.a[t] = m.at(t);
        g.b[t] = 0;
        g.v[t] = 0;
    }
    for (const auto& s : sources) {
        g.a[s] = 0;
        g.b[s] = m.at(s);
        g.v[s] = 0;
    }
    for (const auto& ar : arrows) {
        g.b[ar.to] += m.at(ar.from);
        g.v[ar.to] += u.at(ar.from);
        g.a[ar.from] += m.at(ar.to);
        g.v[ar.from] += u.at(ar.to);
    }
    return g;
}

}  // namespace

Instance build_instance(const BipartiteQuiver& quiver, const std::map<std::string, int>& m_in,
                        const std::map<std::string, int>& u_in, BuildMode mode)
{
    std::set<std::string> source_ids, target_ids;
    for (const auto& s : quiver.sources) {
        if (s.empty()) throw InvalidInstance("empty vertex id");
        if (!source_ids.insert(s).second) throw InvalidInstance("duplicate source id '" + s + "'");
    }
    for (const auto& t : quiver.targets) {
        if (t.empty()) throw InvalidInstance("empty vertex id");
        if (!target_ids.insert(t).second) throw InvalidInstance("duplicate target id '" + t + "'");
        if (source_ids.count(t)) throw InvalidInstance("vertex '" + t + "' is both a source and a target");
    }
    for (const auto& ar : quiver.arrows) {
        if (!source_ids.count(ar.from) || !target_ids.count(ar.to))
            throw InvalidInstance("arrow " + describe(ar) + " has a missing endpoint");
    }

    std::map<std::string, int> m, u;
    for (const auto* side : {&quiver.sources, &quiver.targets}) {
        for (const auto& id : *side) {
            int mv = lookup(m_in, id, "m");
            int uv = lookup(u_in, id, "u");
            if (mv < 1) throw InvalidInstance("m of vertex '" + id + "' must be positive");
            if (uv < 0) throw InvalidInstance("u of vertex '" + id + "' must be nonnegative");
            if (mode == BuildMode::strict && uv == 0)
                throw InvalidInstance("u of vertex '" + id + "' must be positive");
            m[id] = mv;
            u[id] = uv;
        }
    }

    NormalizationReport report;
    std::vector<std::string> sources = quiver.sources;
    std::vector<std::string> targets = quiver.targets;
    std::vector<std::size_t> alive_arrows(quiver.arrows.size());
    for (std::size_t k = 0; k < alive_arrows.size(); ++k) alive_arrows[k] = k;

    auto current_arrows = [&] {
        std::vector<Arrow> out;
        for (auto k : alive_arrows) out.push_back(quiver.arrows[k]);
        return out;
    };

    if (mode == BuildMode::strict) {
        auto g = geometry(sources, targets, current_arrows(), m, u);
        for (const auto* side : {&sources, &targets}) {
            for (const auto& id : *side) {
                int bound = std::min(g.a[id], g.b[id]);
                if (u[id] > bound) {
                    std::ostringstream os;
                    os << "u of vertex '" << id << "' is " << u[id] << " but min(a,b) = " << bound;
                    throw InvalidInstance(os.str());
                }
                if (u[id] > g.v[id]) {
                    std::ostringstream os;
                    os << "u of vertex '" << id << "' is " << u[id] << " but v = " << g.v[id];
                    throw InvalidInstance(os.str());
                }
            }
        }
    } else {
        for (bool changed = true; changed;) {
            changed = false;
            auto g = geometry(sources, targets, current_arrows(), m, u);
            for (const auto* side : {&sources, &targets}) {
                for (const auto& id : *side) {
                    int bound = std::min({g.a[id], g.b[id], g.v[id]});
                    if (u[id] > bound) {
                        report.clamps.push_back({id, u[id], bound});
                        u[id] = bound;
                        changed = true;
                    }
                }
            }
            std::set<std::string> dead;
            for (const auto* side : {&sources, &targets})
                for (const auto& id : *side)
                    if (u[id] == 0) dead.insert(id);
            if (dead.empty()) continue;
            changed = true;
            std::vector<std::size_t> keep;
            for (auto k : alive_arrows) {
                const auto& ar = quiver.arrows[k];
                if (dead.count(ar.from) || dead.count(ar.to)) {
                    report.removed_arrows.push_back({k, ar, m[ar.to], m[ar.from]});
                } else {
                    keep.push_back(k);
                }
            }
            alive_arrows = std::move(keep);
            auto drop = [&](std::vector<std::string>& ids) {
                std::erase_if(ids, [&](const std::string& id) {
                    if (!dead.count(id)) return false;
                    report.removed_vertices.push_back(id);
                    m.erase(id);
                    u.erase(id);
                    return true;
                });
            };
            drop(sources);
            drop(targets);
        }
        std::sort(report.removed_arrows.begin(), report.removed_arrows.end(),
                  [](const RemovedArrow& x, const RemovedArrow& y) { return x.input_index < y.input_index; });
    }

    if (alive_arrows.empty()) throw InvalidInstance("quiver is empty after normalization");

    Instance inst;
    inst.quiver_ = {sources, targets, current_arrows()};
    inst.m_ = std::move(m);
    inst.u_ = std::move(u);
    inst.report_ = std::move(report);
    inst.derive();
    return inst;
}

void Instance::derive()
{
    vertices_.clear();
    vertex_index_.clear();
    for (const auto& s : quiver_.sources) {
        vertex_index_[s] = static_cast<int>(vertices_.size());
        vertices_.push_back({s, Side::source, m_.at(s), u_.at(s), 0, m_.at(s), 0, {}});
    }
    for (const auto& t : quiver_.targets) {
        vertex_index_[t] = static_cast<int>(vertices_.size());
        vertices_.push_back({t, Side::target, m_.at(t), u_.at(t), m_.at(t), 0, 0, {}});
    }

    arrows_.clear();
    int next_cell = 0;
    for (const auto& ar : quiver_.arrows) {
        ArrowInfo info;
        info.source = vertex_index_.at(ar.from);
        info.target = vertex_index_.at(ar.to);
        info.rows = m_.at(ar.to);
        info.cols = m_.at(ar.from);
        info.first_cell = next_cell;
        auto& tv = vertices_[static_cast<std::size_t>(info.target)];
        auto& sv = vertices_[static_cast<std::size_t>(info.source)];
        info.col_offset = tv.b;
        info.row_offset = sv.a;
        tv.b += info.cols;
        tv.v += sv.u;
        sv.a += info.rows;
        sv.v += tv.u;
        int k = static_cast<int>(arrows_.size());
        tv.arrows.push_back(k);
        sv.arrows.push_back(k);
        next_cell += info.rows * info.cols;
        arrows_.push_back(info);
    }
    cell_count_ = next_cell;

    int n = 0;
    for (const auto& ar : arrows_)
        n += vertices_[static_cast<std::size_t>(ar.source)].u * vertices_[static_cast<std::size_t>(ar.target)].u;
    for (const auto& vx : vertices_) n += vx.side == Side::target ? vx.u * (vx.a - vx.u) : vx.u * (vx.b - vx.u);
    facet_size_ = n;

    target_pos_.assign(static_cast<std::size_t>(cell_count_), {});
    source_pos_.assign(static_cast<std::size_t>(cell_count_), {});
    views_.clear();
    for (int g = 0; g < vertex_count(); ++g) {
        const auto& vx = vertices_[static_cast<std::size_t>(g)];
        BlockView view;
        view.vertex = g;
        view.side = vx.side;
        view.u = vx.u;
        view.v = vx.v;
        view.rows = vx.side == Side::target ? vx.a : vx.b;
        view.cols = vx.side == Side::target ? vx.b : vx.a;
        view.grid.assign(static_cast<std::size_t>(view.rows * view.cols), -1);
        for (int k : vx.arrows) {
            const auto& ar = arrows_[static_cast<std::size_t>(k)];
            int offset = vx.side == Side::target ? ar.col_offset : ar.row_offset;
            view.arrows.push_back(k);
            view.page_col_offset.push_back(offset);
            for (int i = 1; i <= ar.rows; ++i) {
                for (int j = 1; j <= ar.cols; ++j) {
                    int idx = ar.first_cell + (i - 1) * ar.cols + (j - 1);
                    ViewPos p = vx.side == Side::target ? ViewPos{i, offset + j} : ViewPos{j, offset + i};
                    view.grid[static_cast<std::size_t>((p.x - 1) * view.cols + (p.y - 1))] = idx;
                    (vx.side == Side::target ? target_pos_ : source_pos_)[static_cast<std::size_t>(idx)] = p;
                }
            }
        }
        views_.push_back(std::move(view));
    }
}

int Instance::vertex_index(const std::string& id) const
{
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end()) throw PreconditionError("unknown vertex '" + id + "'");
    return it->second;
}

Cell Instance::cell(int index) const
{
    if (index < 0 || index >= cell_count_) throw PreconditionError("cell index out of range");
    auto it = std::upper_bound(arrows_.begin(), arrows_.end(), index,
                               [](int idx, const ArrowInfo& a) { return idx < a.first_cell; });
    const auto& ar = *(it - 1);
    int off = index - ar.first_cell;
    return {off / ar.cols + 1, off % ar.cols + 1, static_cast<int>(it - arrows_.begin())};
}

bool Instance::contains(const Cell& c) const
{
    if (c.k < 1 || c.k > arrow_count()) return false;
    const auto& ar = arrows_[static_cast<std::size_t>(c.k - 1)];
    return c.i >= 1 && c.i <= ar.rows && c.j >= 1 && c.j <= ar.cols;
}

int Instance::index(const Cell& c) const
{
    if (!contains(c)) {
        std::ostringstream os;
        os << "cell (" << c.i << "," << c.j << "," << c.k << ") is outside the lattice";
        throw PreconditionError(os.str());
    }
    const auto& ar = arrows_[static_cast<std::size_t>(c.k - 1)];
    return ar.first_cell + (c.i - 1) * ar.cols + (c.j - 1);
}

BlockPos Instance::phi_target(const Cell& c) const
{
    index(c);
    const auto& ar = arrows_[static_cast<std::size_t>(c.k - 1)];
    return {vertices_[static_cast<std::size_t>(ar.target)].id, c.i, ar.col_offset + c.j};
}

BlockPos Instance::phi_source(const Cell& c) const
{
    index(c);
    const auto& ar = arrows_[static_cast<std::size_t>(c.k - 1)];
    return {vertices_[static_cast<std::size_t>(ar.source)].id, ar.row_offset + c.i, c.j};
}

Cell Instance::target_cell(const std::string& vertex, int row, int col) const
{
    const auto& vx = vertices_.at(static_cast<std::size_t>(vertex_index(vertex)));
    if (vx.side != Side::target) throw PreconditionError("'" + vertex + "' is not a target");
    if (row < 1 || row > vx.a || col < 1 || col > vx.b) throw PreconditionError("position outside A_" + vertex);
    return cell(views_[static_cast<std::size_t>(vertex_index(vertex))].at(row, col));
}

Cell Instance::source_cell(const std::string& vertex, int row, int col) const
{
    const auto& vx = vertices_.at(static_cast<std::size_t>(vertex_index(vertex)));
    if (vx.side != Side::source) throw PreconditionError("'" + vertex + "' is not a source");
    if (row < 1 || row > vx.a || col < 1 || col > vx.b) throw PreconditionError("position outside A_" + vertex);
    // the source view is the transpose of A_beta
    return cell(views_[static_cast<std::size_t>(vertex_index(vertex))].at(col, row));
}

int Instance::owner(int cell_index, Side side) const
{
    const auto& ar = arrows_[static_cast<std::size_t>(cell(cell_index).k - 1)];
    return side == Side::target ? ar.target : ar.source;
}

ViewPos Instance::view_pos(int cell_index, Side side) const
{
    return (side == Side::target ? target_pos_ : source_pos_).at(static_cast<std::size_t>(cell_index));
}

int n_cells(const Instance& instance) { return instance.facet_size(); }

}  // namespace bdi
