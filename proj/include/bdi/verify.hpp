#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bdi/quiver.hpp"

namespace bdi {

struct VerifyOptions {
    /// Random subsets used to compare the facet characterizations.
    int subsets = 1000;
    /// Brute-force facet and face oracles run up to this many cells.
    int brute_max_cells = 16;
    /// Exhaustive initial-ideal membership runs up to this many cells.
    int membership_max_cells = 14;
    /// Face enumeration (f-vector, interior faces) runs up to this many cells.
    int face_max_cells = 32;
    std::size_t facet_cap = 10'000'000;
    int threads = 1;
    std::uint64_t seed = 1;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool passed() const;
    /// First failing check, or an empty result when everything passed.
    CheckResult first_failure() const;
};

/// Runs every cross-check that the instance size allows.
VerifyReport verify_instance(const Instance& instance, const VerifyOptions& options);

/// Random instance with at most 3 sources, 2 targets and 4 arrows, m <= 3,
/// ranks drawn below min(a, b) and then normalized; at most max_cells cells.
Instance random_instance(std::mt19937_64& rng, int max_cells = 16);

}  // namespace bdi
