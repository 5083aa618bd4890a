#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bdi/cell_set.hpp"
#include "bdi/quiver.hpp"

namespace bdi {

/// Face counts of the complex. Index c of `faces` is the number of faces with
/// c cells, i.e. of dimension c-1; so faces[0] = 1 counts the empty face.
struct FaceTable {
    std::vector<std::uint64_t> faces;
    std::vector<std::uint64_t> interior;  // filled by interior_faces
    /// Present only when requested; grouped by cardinality.
    std::optional<std::vector<std::vector<CellSet>>> stored;

    std::uint64_t total() const;
    std::uint64_t interior_total() const;
};

struct FaceOptions {
    int max_cells = 32;
    bool store_faces = false;
};

/// Counts all u-compatible sets by size. Throws ResourceLimit above the guard.
FaceTable f_vector(const Instance& instance, const FaceOptions& options = {});

/// The facets containing a compatible set with one cell fewer than a facet.
std::vector<CellSet> codim1_membership(const Instance& instance, const CellSet& face);

/// Codimension-one faces lying in a single facet.
std::vector<CellSet> boundary_generators(const Instance& instance, const std::vector<CellSet>& facets);

/// Fills table.interior from the stored faces.
void interior_faces(const Instance& instance, FaceTable& table, const std::vector<CellSet>& facets);

enum class ShellingDirection { increasing, decreasing };

struct ShellingReport {
    bool passed = true;
    std::string first_violation;
    /// restriction sizes, one per facet in the given order
    std::vector<int> restriction;
    /// h-vector read off the restriction sizes
    std::vector<std::uint64_t> h;
};

/// Checks that every facet meets the union of its predecessors in a pure
/// codimension-one subcomplex. With `expected_restriction` given, each
/// restriction size must match it too.
ShellingReport verify_shelling(const Instance& instance, const std::vector<CellSet>& facets_in_order,
                               const std::vector<int>* expected_restriction = nullptr);

struct VdcSample {
    int prefix = 0;
    CellSet fixed;
    bool well_defined = false;  // the fixed set is itself compatible
    bool pure = false;
    int max_size = 0;
    int min_size = 0;
};

struct VdcReport {
    std::vector<VdcSample> samples;
    int well_defined = 0;
    int pure = 0;
    bool passed() const { return pure == well_defined; }
};

/// Random purity checks of the link-deletion complexes: for a prefix of the
/// cell order and a subset of it, all maximal extensions by later cells must
/// have the same size.
VdcReport check_vertex_decomposition_samples(const Instance& instance, int sample_budget, int size_guard = 14,
                                             std::uint64_t seed = 1);

/// One sample with an explicit prefix length and fixed subset.
VdcSample vdc_sample(const Instance& instance, int prefix, const CellSet& fixed);

}  // namespace bdi
