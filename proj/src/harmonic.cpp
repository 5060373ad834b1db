#include "alcove/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

namespace alcove {
namespace {

constexpr double kPi = std::numbers::pi;

std::array<double, 3> line_through_points(const std::array<double, 2>& p,
                                          const std::array<double, 2>& q) {
    return {p[1] - q[1], q[0] - p[0], p[0] * q[1] - q[0] * p[1]};
}

std::array<double, 2> cross_affine(const std::array<double, 3>& l1,
                                   const std::array<double, 3>& l2) {
    double det = l1[0] * l2[1] - l2[0] * l1[1];
    return {(l1[1] * l2[2] - l2[1] * l1[2]) / det, (l2[0] * l1[2] - l1[0] * l2[2]) / det};
}

}  // namespace

HarmonicSpec generate(int n, bool rationalize, long max_denominator) {
    if (n < 3) throw GeomError("harmonic arrangement needs n >= 3");
    HarmonicSpec spec;
    spec.n = n;
    for (int j = 0; j < n; ++j) {
        double theta = 2.0 * kPi * j / n;
        spec.vertices.push_back({std::cos(theta), std::sin(theta)});
    }
    for (int j = 0; j < n; ++j)
        spec.lines.push_back(line_through_points(spec.vertices[j], spec.vertices[(j + 1) % n]));

    if (n % 2 == 0)
        for (int j = 0; j < n / 2; ++j) spec.parallel_pairs.emplace_back(j, j + n / 2);

    if (rationalize) {
        if (n % 2 == 1) {
            for (const auto& l : spec.lines)
                spec.rationalized_lines.emplace_back(rationalize_line(l, max_denominator));
            PositionReport rep = check_position(spec.rationalized_lines);
            if (!rep.bounded_general())
                throw NotBoundedGeneralPosition(
                    "rationalization broke bounded general position for n=" + std::to_string(n));
        } else {
            // The second half of the lines are the point reflections of the
            // first half through the origin; deriving them keeps the n/2
            // parallel pairs exactly parallel after rounding.
            for (int j = 0; j < n / 2; ++j)
                spec.rationalized_lines.emplace_back(rationalize_line(spec.lines[j], max_denominator));
            for (int j = 0; j < n / 2; ++j) {
                const ProjLine& l = spec.rationalized_lines[j];
                spec.rationalized_lines.emplace_back(l.a(), l.b(), -l.c());
            }
        }
    }
    return spec;
}

ProjLine rationalize_line(const std::array<double, 3>& l, long max_denominator) {
    return ProjLine(rationalize(l[0], max_denominator), rationalize(l[1], max_denominator),
                    rationalize(l[2], max_denominator));
}

double ring_radius(int n, int k) {
    int kmax = (n % 2 == 1) ? (n - 1) / 2 : (n - 2) / 2;
    if (k < 1 || k > kmax) {
        std::ostringstream msg;
        msg << "ring index k=" << k << " out of range [1," << kmax << "] for n=" << n;
        if (n % 2 == 0 && k == n / 2) msg << " (parallel pair, intersection at infinity)";
        throw OutOfRangeK(msg.str());
    }
    return std::sin(kPi / 2 * (1.0 - 2.0 / n)) / std::sin(kPi / 2 * (1.0 - 2.0 * k / n));
}

std::vector<RingReport> verify_rings(const HarmonicSpec& spec, double tol) {
    if (tol <= 0) throw GeomError("tolerance must be positive");
    const int n = spec.n;
    std::vector<RingReport> reports;
    for (int k = 1; k <= spec.max_ring(); ++k) {
        RingReport rep;
        rep.k = k;
        rep.predicted_radius = ring_radius(n, k);
        std::vector<double> angles(n);
        for (int j = 0; j < n; ++j) {
            auto p = cross_affine(spec.lines[j], spec.lines[(j + k) % n]);
            rep.measured_radii.push_back(std::hypot(p[0], p[1]));
            angles[j] = std::atan2(p[1], p[0]);
        }
        for (int j = 0; j < n; ++j) {
            double d = angles[(j + 1) % n] - angles[j];
            while (d < 0) d += 2 * kPi;
            while (d >= 2 * kPi) d -= 2 * kPi;
            rep.consecutive_angles.push_back(d);
        }
        for (double r : rep.measured_radii)
            rep.worst_radius_error =
                std::max(rep.worst_radius_error, std::abs(r - rep.predicted_radius));
        for (double a : rep.consecutive_angles)
            rep.worst_angle_error = std::max(rep.worst_angle_error, std::abs(a - 2 * kPi / n));
        if (rep.worst_radius_error > tol || rep.worst_angle_error > tol) {
            std::ostringstream msg;
            msg << "ring k=" << k << " for n=" << n << ": worst radius error "
                << rep.worst_radius_error << ", worst angle error " << rep.worst_angle_error
                << " exceed tolerance " << tol;
            throw ToleranceExceeded(msg.str());
        }
        reports.push_back(std::move(rep));
    }
    return reports;
}

size_t AlcoveClassification::total() const {
    size_t t = (central >= 0 ? 1 : 0) + first_kind.size();
    for (const auto& [j, v] : second_kind) t += v.size();
    return t;
}

AlcoveClassification classify_alcoves(const HarmonicSpec& spec, const Arrangement& arr) {
    const int n = spec.n;
    if (n % 2 == 0) throw GeomError("classification is defined for odd n");
    if (static_cast<int>(arr.lines().size()) != n)
        throw GeomError("arrangement does not match the harmonic spec");

    auto mod_set = [n](std::initializer_list<int> idx) {
        std::set<int> s;
        for (int i : idx) s.insert(((i % n) + n) % n);
        return s;
    };

    AlcoveClassification cls;
    ProjPoint origin = ProjPoint::affine(0, 0);
    std::vector<bool> used(arr.alcoves().size(), false);

    for (size_t a = 0; a < arr.alcoves().size(); ++a) {
        if (point_in_convex_polygon(origin, arr.alcoves()[a].polygon) == Region::Interior) {
            cls.central = static_cast<int>(a);
            used[a] = true;
            break;
        }
    }
    if (cls.central < 0) throw ClassificationIncomplete("no alcove contains the origin");

    for (size_t a = 0; a < arr.alcoves().size(); ++a) {
        if (used[a]) continue;
        const auto& ls = arr.alcoves()[a].lines_sorted;
        std::set<int> s(ls.begin(), ls.end());
        bool matched = false;
        if (s.size() == 3) {
            for (int i = 0; i < n && !matched; ++i) {
                if (s == mod_set({i, i + 1, i + 2})) {
                    cls.first_kind.push_back(static_cast<int>(a));
                    matched = true;
                }
            }
        } else if (s.size() == 4) {
            // Family j pairs the adjacent sides {i, i+1} with the adjacent
            // sides {i+j+1, i+j+2}; its corners sit on concentric rings
            // j, j+1, j+2 counted outward from the central polygon.
            for (int j = 1; j <= (n - 5) / 2 && !matched; ++j) {
                for (int i = 0; i < n && !matched; ++i) {
                    if (s == mod_set({i, i + 1, i + j + 1, i + j + 2})) {
                        cls.second_kind[j].push_back(static_cast<int>(a));
                        matched = true;
                    }
                }
            }
        }
        if (!matched)
            throw ClassificationIncomplete("alcove " + std::to_string(a) +
                                           " matched no line-index pattern");
        used[a] = true;
    }
    return cls;
}

ClassSplit class_split(int n) {
    if (n < 5 || n % 2 == 0) throw GeomError("class split is defined for odd n >= 5");
    ClassSplit cs;
    cs.m = static_cast<long long>(n) * (n - 1);
    cs.central_share = 2LL * n;
    cs.first_share = 2LL * n;
    cs.second_share = static_cast<long long>(n) * (n - 5);
    return cs;
}

}  // namespace alcove
