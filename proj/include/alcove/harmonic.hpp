#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "alcove/arrangement.hpp"

namespace alcove {

struct OutOfRangeK : GeomError {
    using GeomError::GeomError;
};
struct ToleranceExceeded : GeomError {
    using GeomError::GeomError;
};
struct ClassificationIncomplete : GeomError {
    using GeomError::GeomError;
};

// Regular n-gon edge-line arrangement. Float data carries the metric
// structure; rationalized lines carry the combinatorics.
struct HarmonicSpec {
    int n = 0;
    std::vector<std::array<double, 2>> vertices;       // unit-circle n-gon
    std::vector<std::array<double, 3>> lines;          // a, b, c
    std::vector<ProjLine> rationalized_lines;          // empty if not requested
    std::vector<std::pair<int, int>> parallel_pairs;   // (j, j+n/2) for even n

    int max_ring() const { return (n - 1 - (n % 2 == 0 ? 1 : 0)) / 2; }
};

HarmonicSpec generate(int n, bool rationalize = true, long max_denominator = 1000000);

/// Rounds each coefficient to a rational with the given denominator.
ProjLine rationalize_line(const std::array<double, 3>& l, long max_denominator);

/// Radius of the circle carrying the intersections l_j with l_{j+k}.
double ring_radius(int n, int k);

struct RingReport {
    int k = 0;
    double predicted_radius = 0.0;
    std::vector<double> measured_radii;
    std::vector<double> consecutive_angles;
    double worst_radius_error = 0.0;
    double worst_angle_error = 0.0;
};

/// One report per ring; throws ToleranceExceeded (naming the worst
/// offender) if any radius or subtended angle misses the prediction.
std::vector<RingReport> verify_rings(const HarmonicSpec& spec, double tol = 1e-9);

struct AlcoveClassification {
    int central = -1;                       // alcove index containing the origin
    std::vector<int> first_kind;            // n triangles on {l_i, l_i+1, l_i+2}
    std::map<int, std::vector<int>> second_kind;  // j -> n quads on {l_i, l_i+1, l_i+2j, l_i+2j+1}

    size_t total() const;
};

/// Requires odd n and arr built from spec.rationalized_lines.
AlcoveClassification classify_alcoves(const HarmonicSpec& spec, const Arrangement& arr);

struct ClassSplit {
    long long m = 0;  // class of a nonsingular degree-n curve, n(n-1)
    long long central_share = 0;
    long long first_share = 0;
    long long second_share = 0;
};

ClassSplit class_split(int n);

}  // namespace alcove
