#include "alcove/geom.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace alcove {
namespace {

// Clears denominators, divides out the content and fixes the sign of the
// first nonzero entry, so projectively equal triples become identical.
void normalize(std::array<ExactScalar, 3>& c) {
    BigInt l = 1;
    for (const auto& v : c) l = lcm(l, denominator(v));
    std::array<BigInt, 3> n;
    for (int i = 0; i < 3; ++i) n[i] = numerator(c[i]) * (l / denominator(c[i]));

    BigInt g = 0;
    for (const auto& v : n) g = gcd(g, v);
    if (g == 0) throw GeomError("all homogeneous coordinates are zero");
    for (auto& v : n) v /= g;

    int lead = 0;
    while (n[lead] == 0) ++lead;
    if (n[lead] < 0)
        for (auto& v : n) v = -v;

    for (int i = 0; i < 3; ++i) c[i] = ExactScalar(n[i]);
}

}  // namespace

ProjPoint::ProjPoint(ExactScalar x, ExactScalar y, ExactScalar z)
    : c_{std::move(x), std::move(y), std::move(z)} {
    normalize(c_);
}

ProjPoint ProjPoint::affine(ExactScalar x, ExactScalar y) {
    return ProjPoint(std::move(x), std::move(y), 1);
}

ExactScalar ProjPoint::affine_x() const {
    if (at_infinity()) throw PointAtInfinity();
    return c_[0] / c_[2];
}

ExactScalar ProjPoint::affine_y() const {
    if (at_infinity()) throw PointAtInfinity();
    return c_[1] / c_[2];
}

ProjLine::ProjLine(ExactScalar a, ExactScalar b, ExactScalar c)
    : c_{std::move(a), std::move(b), std::move(c)} {
    normalize(c_);
}

bool ProjLine::contains(const ProjPoint& p) const {
    return ExactScalar(c_[0] * p.x() + c_[1] * p.y() + c_[2] * p.z()).is_zero();
}

bool ProjLine::parallel_to(const ProjLine& other) const {
    return ExactScalar(c_[0] * other.b() - other.a() * c_[1]).is_zero();
}

std::string ProjLine::to_string() const {
    return "[" + rational_to_string(c_[0]) + ":" + rational_to_string(c_[1]) + ":" +
           rational_to_string(c_[2]) + "]";
}

ProjLine line_through(const ProjPoint& p, const ProjPoint& q) {
    if (p == q) throw IdenticalPoints();
    // Cross product of the homogeneous coordinate vectors.
    return ProjLine(p.y() * q.z() - p.z() * q.y(),
                    p.z() * q.x() - p.x() * q.z(),
                    p.x() * q.y() - p.y() * q.x());
}

ProjPoint intersect(const ProjLine& l1, const ProjLine& l2) {
    if (l1 == l2) throw IdenticalLines();
    return ProjPoint(l1.b() * l2.c() - l1.c() * l2.b(),
                     l1.c() * l2.a() - l1.a() * l2.c(),
                     l1.a() * l2.b() - l1.b() * l2.a());
}

Orientation orientation(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
    if (p.at_infinity() || q.at_infinity() || r.at_infinity()) throw PointAtInfinity();
    // Work in affine coordinates: normalization fixes the sign of the first
    // nonzero homogeneous entry, so Z may be negative and the raw 3x3
    // determinant sign is unreliable.
    ExactScalar det = (q.affine_x() - p.affine_x()) * (r.affine_y() - p.affine_y()) -
                      (q.affine_y() - p.affine_y()) * (r.affine_x() - p.affine_x());
    int s = sign_of(det);
    if (s > 0) return Orientation::Left;
    if (s < 0) return Orientation::Right;
    return Orientation::Collinear;
}

Region point_in_convex_polygon(const ProjPoint& p, const std::vector<ProjPoint>& poly) {
    const size_t m = poly.size();
    if (m < 3) throw DegeneratePolygon("polygon needs at least 3 vertices");
    for (size_t i = 0; i < m; ++i) {
        if (orientation(poly[i], poly[(i + 1) % m], poly[(i + 2) % m]) != Orientation::Left)
            throw DegeneratePolygon("polygon is not strictly convex counterclockwise");
    }
    bool on_boundary = false;
    for (size_t i = 0; i < m; ++i) {
        switch (orientation(poly[i], poly[(i + 1) % m], p)) {
            case Orientation::Right:
                return Region::Exterior;
            case Orientation::Collinear:
                on_boundary = true;
                break;
            case Orientation::Left:
                break;
        }
    }
    return on_boundary ? Region::OnBoundary : Region::Interior;
}

}  // namespace alcove
