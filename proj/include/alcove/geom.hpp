#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "alcove/exact.hpp"

namespace alcove {

struct GeomError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IdenticalPoints : GeomError {
    IdenticalPoints() : GeomError("points are projectively identical") {}
};
struct IdenticalLines : GeomError {
    IdenticalLines() : GeomError("lines are projectively identical") {}
};
struct PointAtInfinity : GeomError {
    PointAtInfinity() : GeomError("point has Z = 0") {}
};
struct DegeneratePolygon : GeomError {
    using GeomError::GeomError;
};

// Homogeneous point [X:Y:Z]. Stored normalized: coordinates are coprime
// integers and the first nonzero coordinate is positive, so projective
// equality is plain field-wise comparison.
class ProjPoint {
public:
    ProjPoint(ExactScalar x, ExactScalar y, ExactScalar z);
    static ProjPoint affine(ExactScalar x, ExactScalar y);

    const ExactScalar& x() const { return c_[0]; }
    const ExactScalar& y() const { return c_[1]; }
    const ExactScalar& z() const { return c_[2]; }

    bool at_infinity() const { return c_[2].is_zero(); }
    ExactScalar affine_x() const;
    ExactScalar affine_y() const;

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

private:
    std::array<ExactScalar, 3> c_;
};

// Line aX + bY + cZ = 0, normalized the same way as ProjPoint.
class ProjLine {
public:
    ProjLine(ExactScalar a, ExactScalar b, ExactScalar c);

    const ExactScalar& a() const { return c_[0]; }
    const ExactScalar& b() const { return c_[1]; }
    const ExactScalar& c() const { return c_[2]; }

    bool contains(const ProjPoint& p) const;
    /// True when the affine parts are parallel (a1*b2 - a2*b1 = 0).
    bool parallel_to(const ProjLine& other) const;

    friend bool operator==(const ProjLine&, const ProjLine&) = default;

    std::string to_string() const;

private:
    std::array<ExactScalar, 3> c_;
};

ProjLine line_through(const ProjPoint& p, const ProjPoint& q);
ProjPoint intersect(const ProjLine& l1, const ProjLine& l2);

enum class Orientation { Left, Right, Collinear };

/// Sign of the homogeneous 3x3 determinant; all points must be affine.
Orientation orientation(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);

enum class Region { Interior, OnBoundary, Exterior };

/// poly must be strictly convex and counterclockwise; throws
/// DegeneratePolygon otherwise.
Region point_in_convex_polygon(const ProjPoint& p, const std::vector<ProjPoint>& poly);

}  // namespace alcove
