#include "bdi/complex.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_set>

#include "bdi/chains.hpp"
#include "bdi/error.hpp"
#include "bdi/vertex_map.hpp"

namespace bdi {

std::uint64_t FaceTable::total() const { return std::accumulate(faces.begin(), faces.end(), std::uint64_t{0}); }

std::uint64_t FaceTable::interior_total() const
{
    return std::accumulate(interior.begin(), interior.end(), std::uint64_t{0});
}

namespace {

void guard(const Instance& instance, int max_cells)
{
    if (instance.cell_count() > max_cells) {
        std::ostringstream os;
        os << "lattice has " << instance.cell_count() << " cells, above the guard of " << max_cells;
        throw ResourceLimit(os.str());
    }
}

void count_faces(const Instance& instance, CellSet& current, int size, int next, FaceTable& table)
{
    table.faces[static_cast<std::size_t>(size)] += 1;
    if (table.stored) (*table.stored)[static_cast<std::size_t>(size)].push_back(current);
    for (int idx = next; idx < instance.cell_count(); ++idx) {
        if (!can_extend(instance, current, idx)) continue;
        current.set(idx);
        count_faces(instance, current, size + 1, idx + 1, table);
        current.reset(idx);
    }
}

}  // namespace

FaceTable f_vector(const Instance& instance, const FaceOptions& options)
{
    guard(instance, options.max_cells);
    FaceTable table;
    table.faces.assign(static_cast<std::size_t>(instance.facet_size()) + 1, 0);
    if (options.store_faces) table.stored.emplace(table.faces.size());
    CellSet current(instance.cell_count());
    count_faces(instance, current, 0, 0, table);
    return table;
}

std::vector<CellSet> codim1_membership(const Instance& instance, const CellSet& face)
{
    if (face.count() != instance.facet_size() - 1) throw PreconditionError("set must have one cell fewer than a facet");
    if (!is_u_compatible(instance, face)) throw PreconditionError("set is not u-compatible");
    CellSet lo = c_min(instance, face);
    CellSet hi = c_max(instance, face);
    if (lo == hi) return {hi};
    return {lo, hi};
}

std::vector<CellSet> boundary_generators(const Instance& instance, const std::vector<CellSet>& facets)
{
    std::unordered_set<CellSet, CellSetHash> seen;
    std::vector<CellSet> out;
    for (const auto& f : facets) {
        for (int idx : f.indices()) {
            CellSet s = f.without(idx);
            if (!seen.insert(s).second) continue;
            if (codim1_membership(instance, s).size() == 1) out.push_back(s);
        }
    }
    return out;
}

void interior_faces(const Instance& instance, FaceTable& table, const std::vector<CellSet>& facets)
{
    if (!table.stored) throw PreconditionError("interior faces need the stored face lists");
    auto boundary = boundary_generators(instance, facets);
    table.interior.assign(table.faces.size(), 0);
    for (std::size_t c = 0; c < table.stored->size(); ++c) {
        for (const auto& face : (*table.stored)[c]) {
            bool on_boundary = std::any_of(boundary.begin(), boundary.end(),
                                           [&](const CellSet& b) { return face.is_subset_of(b); });
            if (!on_boundary) table.interior[c] += 1;
        }
    }
}

ShellingReport verify_shelling(const Instance& instance, const std::vector<CellSet>& facets,
                               const std::vector<int>* expected)
{
    ShellingReport report;
    report.h.assign(static_cast<std::size_t>(instance.facet_size()) + 1, 0);
    const int n = instance.facet_size();
    auto fail = [&](std::size_t j, const std::string& why) {
        if (report.passed) {
            std::ostringstream os;
            os << "facet " << j + 1 << ": " << why;
            report.first_violation = os.str();
        }
        report.passed = false;
    };
    for (std::size_t j = 0; j < facets.size(); ++j) {
        const auto& fj = facets[j];
        CellSet restriction(instance.cell_count());
        for (std::size_t i = 0; i < j; ++i) {
            CellSet common = facets[i] & fj;
            if (common.count() == n - 1) restriction = restriction | (fj - facets[i]);
        }
        for (std::size_t i = 0; i < j; ++i) {
            if (restriction.is_subset_of(facets[i])) {
                std::ostringstream os;
                os << "meets facet " << i + 1 << " outside the codimension-one part";
                fail(j, os.str());
            }
        }
        int r = restriction.count();
        report.restriction.push_back(r);
        report.h[static_cast<std::size_t>(r)] += 1;
        if (expected && (j >= expected->size() || (*expected)[j] != r)) {
            std::ostringstream os;
            os << "restriction size " << r << " differs from the expected "
               << (j < expected->size() ? std::to_string((*expected)[j]) : std::string("(missing)"));
            fail(j, os.str());
        }
    }
    while (report.h.size() > 1 && report.h.back() == 0) report.h.pop_back();
    return report;
}

namespace {

struct ExtensionSizes {
    int lo = -1;
    int hi = -1;
};

void maximal_extensions(const Instance& instance, CellSet& current, int size, int next, int prefix,
                        ExtensionSizes& out)
{
    bool maximal = true;
    for (int idx = prefix; idx < instance.cell_count(); ++idx) {
        if (current.test(idx) || !can_extend(instance, current, idx)) continue;
        maximal = false;
        if (idx < next) continue;
        current.set(idx);
        maximal_extensions(instance, current, size + 1, idx + 1, prefix, out);
        current.reset(idx);
    }
    if (maximal) {
        out.lo = out.lo < 0 ? size : std::min(out.lo, size);
        out.hi = std::max(out.hi, size);
    }
}

}  // namespace

VdcSample vdc_sample(const Instance& instance, int prefix, const CellSet& fixed)
{
    if (prefix < 0 || prefix > instance.cell_count()) throw PreconditionError("prefix length out of range");
    for (int idx : fixed.indices())
        if (idx >= prefix) throw PreconditionError("fixed set must lie inside the prefix");
    VdcSample s;
    s.prefix = prefix;
    s.fixed = fixed;
    s.well_defined = is_u_compatible(instance, fixed);
    if (!s.well_defined) return s;
    ExtensionSizes sizes;
    CellSet current = fixed;
    maximal_extensions(instance, current, 0, prefix, prefix, sizes);
    s.min_size = sizes.lo;
    s.max_size = sizes.hi;
    s.pure = sizes.lo == sizes.hi;
    return s;
}

VdcReport check_vertex_decomposition_samples(const Instance& instance, int sample_budget, int size_guard,
                                             std::uint64_t seed)
{
    guard(instance, size_guard);
    std::mt19937_64 rng(seed);
    VdcReport report;
    for (int t = 0; t < sample_budget; ++t) {
        int prefix = std::uniform_int_distribution<int>(0, instance.cell_count())(rng);
        std::vector<int> order(static_cast<std::size_t>(prefix));
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        CellSet fixed(instance.cell_count());
        for (int idx : order) {
            if (std::bernoulli_distribution(0.5)(rng) && can_extend(instance, fixed, idx)) fixed.set(idx);
        }
        auto s = vdc_sample(instance, prefix, fixed);
        report.well_defined += s.well_defined ? 1 : 0;
        report.pure += s.pure ? 1 : 0;
        report.samples.push_back(std::move(s));
    }
    return report;
}

}  // namespace bdi
