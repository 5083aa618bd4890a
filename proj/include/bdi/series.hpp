#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bdi/cell_set.hpp"
#include "bdi/complex.hpp"
#include "bdi/quiver.hpp"

namespace bdi {

using BigInt = boost::multiprecision::cpp_int;
/// Coefficient list, lowest degree first.
using Polynomial = std::vector<BigInt>;

/// Drops trailing zero coefficients, keeping at least one entry.
Polynomial trimmed(Polynomial p);

enum class HRoute { se_corners, nw_corners, f_transform };

/// Facets grouped by their number of essential SE corners.
Polynomial h_from_se_corners(const Instance& instance, const std::vector<CellSet>& facets);
/// Facets grouped by their number of essential NW corners.
Polynomial h_from_nw_corners(const Instance& instance, const std::vector<CellSet>& facets);
/// sum over face sizes c of f_c t^c (1-t)^(N-c).
Polynomial h_from_faces(const Instance& instance, const FaceTable& table);
/// sum over interior faces of (t-1)^(N-|C|).
Polynomial h_from_interior(const Instance& instance, const FaceTable& table);

/// Runs every route whose input is supplied and throws VerificationFailure
/// unless they all agree. At least one input must be non-null.
Polynomial h_polynomial(const Instance& instance, const std::vector<CellSet>* facets, const FaceTable* table);

struct HilbertSeries {
    Polynomial numerator;
    int denominator_exponent = 0;

    BigInt multiplicity() const;
    bool palindromic() const;
    /// e.g. "(1+7t+4t^2)/(1-t)^5"
    std::string render() const;
};

HilbertSeries hilbert_series(const Instance& instance, const Polynomial& h);

/// Same series, with the numerator re-derived from interior faces and
/// checked against the given one.
HilbertSeries hilbert_series_checked(const Instance& instance, const Polynomial& h, const FaceTable& table);

/// Facet count, checked against H(1).
BigInt multiplicity(const std::vector<CellSet>& facets, const Polynomial& h);

bool gorenstein_hint(const Polynomial& h);

std::string to_string(const BigInt& value);

}  // namespace bdi
