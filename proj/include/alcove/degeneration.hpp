#pragma once

#include <array>
#include <complex>
#include <map>
#include <stdexcept>
#include <vector>

#include "alcove/poly2.hpp"

namespace alcove {

struct SolverFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SingularCurve : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ClusterAmbiguity : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Product of affine lines a*x + b*y + c; degree equals the line count.
BivariatePoly product_of_lines(const std::vector<std::array<double, 3>>& lines);

struct TangentPoint {
    std::complex<double> x, y;
    double residual = 0.0;  // max(|f|, |f_x|) on the coefficient-normalized f
    bool is_real(double eps = 1e-7) const {
        return std::abs(x.imag()) <= eps && std::abs(y.imag()) <= eps;
    }
};

/// Solutions of f = 0, df/dx = 0 over the complex numbers: hidden-variable
/// resultant in y, companion-matrix roots, back-substitution, Newton polish.
/// Throws SingularCurve when a solution is also a root of df/dy.
std::vector<TangentPoint> vertical_tangents(const BivariatePoly& f, double tol = 1e-10);

// Pencil (1-s) * product(lines) + s * generic, degenerating to the line
// union at s = 0.
struct CurveFamily {
    std::vector<std::array<double, 3>> lines;
    BivariatePoly lines_poly;
    BivariatePoly generic_poly;
    unsigned seed = 0;

    BivariatePoly member(double s) const;
};

/// Random generic member with coefficients uniform in [-1, 1], redrawn if
/// the member at s_check comes out singular.
CurveFamily make_pencil(const std::vector<std::array<double, 3>>& lines, unsigned seed,
                        double s_check = 1e-2);

struct TangentReport {
    double s = 0.0;
    std::vector<TangentPoint> tangents;
    std::map<std::pair<int, int>, int> clusters;  // line index pair -> tangent count
    std::vector<int> unclustered;                 // indices into tangents
    bool two_per_node = false;
};

/// cluster_radius <= 0 selects the default: a quarter of the minimum
/// pairwise distance between the line intersections.
std::vector<TangentReport> run_degeneration(const CurveFamily& family,
                                            const std::vector<double>& s_values,
                                            double cluster_radius = 0.0, double tol = 1e-10);

/// Pairwise intersection points of the affine lines.
std::vector<std::pair<std::pair<int, int>, std::array<double, 2>>> line_nodes(
    const std::vector<std::array<double, 3>>& lines);

}  // namespace alcove
