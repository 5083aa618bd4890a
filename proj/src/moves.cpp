#include "bdi/moves.hpp"

#include <algorithm>
#include <set>
#include <thread>
#include <unordered_set>
#include <utility>

#include "bdi/error.hpp"

namespace bdi {

namespace {

std::vector<ChuteMove> scan(const Instance& instance, const CellSet& set, bool inverse)
{
    std::vector<ChuteMove> out;
    std::set<std::pair<int, int>> seen;
    for (int g = 0; g < instance.vertex_count(); ++g) {
        const auto& view = instance.view(g);
        auto member = [&](int x, int y) { return set.test(view.at(x, y)); };
        const auto direction = view.side == Side::target ? Orientation::horizontal : Orientation::vertical;
        for (int x = 1; x < view.rows; ++x) {
            for (int y = 1; y < view.cols; ++y) {
                if (!member(x + 1, y)) continue;
                if (member(x, y) != inverse) continue;
                for (int t = y + 1; t <= view.cols; ++t) {
                    bool top = member(x, t);
                    bool bottom = member(x + 1, t);
                    if (!top) {
                        if (bottom) break;
                        continue;
                    }
                    if (bottom == inverse) break;
                    int nw = view.at(x, y);
                    int se = view.at(x + 1, t);
                    ChuteMove mv{direction, g, inverse ? nw : se, inverse ? se : nw, {x, y}, t - y + 1};
                    if (seen.insert({mv.removed, mv.added}).second) out.push_back(mv);
                    break;
                }
            }
        }
    }
    return out;
}

void check_rectangle(const Instance& instance, const CellSet& set, const ChuteMove& mv, bool inverse)
{
    if (mv.vertex < 0 || mv.vertex >= instance.vertex_count()) throw PreconditionError("move names an unknown block");
    const auto& view = instance.view(mv.vertex);
    const int x = mv.first.x;
    const int y = mv.first.y;
    const int last = y + mv.length - 1;
    if (mv.length < 2 || x < 1 || x + 1 > view.rows || y < 1 || last > view.cols)
        throw PreconditionError("move rectangle lies outside its block");
    const int nw = view.at(x, y);
    const int se = view.at(x + 1, last);
    if (mv.removed != (inverse ? nw : se) || mv.added != (inverse ? se : nw))
        throw PreconditionError("move cells do not match its rectangle");
    for (int r = x; r <= x + 1; ++r) {
        for (int c = y; c <= last; ++c) {
            bool corner_sw = r == x + 1 && c == y;
            bool corner_ne = r == x && c == last;
            bool corner_se = r == x + 1 && c == last;
            bool corner_nw = r == x && c == y;
            bool expected = corner_sw || corner_ne || (inverse ? corner_nw : corner_se);
            if (set.test(view.at(r, c)) != expected) throw PreconditionError("move does not apply to this set");
        }
    }
}

}  // namespace

std::vector<ChuteMove> chutable_moves(const Instance& instance, const CellSet& facet)
{
    if (!is_cvm(instance, facet)) throw PreconditionError("set is not a concurrent vertex map");
    return scan(instance, facet, false);
}

std::vector<ChuteMove> inverse_chutable_moves(const Instance& instance, const CellSet& facet)
{
    if (!is_cvm(instance, facet)) throw PreconditionError("set is not a concurrent vertex map");
    return scan(instance, facet, true);
}

CellSet apply_move(const Instance& instance, const CellSet& facet, const ChuteMove& move)
{
    check_rectangle(instance, facet, move, false);
    return facet.without(move.removed).with(move.added);
}

CellSet apply_inverse_move(const Instance& instance, const CellSet& facet, const ChuteMove& move)
{
    check_rectangle(instance, facet, move, true);
    return facet.without(move.removed).with(move.added);
}

std::vector<CellSet> enumerate_facets(const Instance& instance, const EnumerationOptions& options)
{
    auto expand = [&](const CellSet& f, std::vector<CellSet>& sink) {
        for (const auto& mv : scan(instance, f, false)) sink.push_back(f.without(mv.removed).with(mv.added));
    };

    std::unordered_set<CellSet, CellSetHash> visited;
    std::vector<CellSet> order;
    std::vector<CellSet> frontier{initial_cvm(instance)};
    visited.insert(frontier.front());
    order.push_back(frontier.front());
    const std::size_t workers = static_cast<std::size_t>(std::max(1, options.threads));

    while (!frontier.empty()) {
        std::vector<std::vector<CellSet>> produced(std::min(workers, frontier.size()));
        if (produced.size() <= 1) {
            produced.resize(1);
            for (const auto& f : frontier) expand(f, produced[0]);
        } else {
            std::vector<std::thread> pool;
            for (std::size_t w = 0; w < produced.size(); ++w) {
                pool.emplace_back([&, w] {
                    for (std::size_t i = w; i < frontier.size(); i += produced.size()) expand(frontier[i], produced[w]);
                });
            }
            for (auto& th : pool) th.join();
        }
        std::vector<CellSet> next;
        for (auto& batch : produced) {
            for (auto& child : batch) {
                if (!visited.insert(child).second) continue;
                if (visited.size() > options.facet_cap)
                    throw ResourceLimit("facet enumeration exceeded the cap of " + std::to_string(options.facet_cap));
                order.push_back(child);
                next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
    }
    std::sort(order.begin(), order.end(), [](const CellSet& a, const CellSet& b) { return cmp_t_sets(a, b) < 0; });
    return order;
}

}  // namespace bdi
