#include "alcove/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace alcove {
namespace {

std::string fmt(double v) {
    char buf[64];
    if (std::abs(v) < 5e-7) v = 0.0;  // avoid "-0.000000"
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

const char* kClassFills[] = {"#d9c8f0", "#c8e0f0", "#c8f0d0", "#f0e0c0", "#f0c8c8"};

}  // namespace

void SvgScene::fit(double margin) {
    double lo_x = 0, lo_y = 0, hi_x = 0, hi_y = 0;
    bool any = false;
    auto take = [&](double x, double y) {
        if (!any) {
            lo_x = hi_x = x;
            lo_y = hi_y = y;
            any = true;
        } else {
            lo_x = std::min(lo_x, x);
            hi_x = std::max(hi_x, x);
            lo_y = std::min(lo_y, y);
            hi_y = std::max(hi_y, y);
        }
    };
    for (const auto& p : alcove_fills)
        for (const auto& pt : p.points) take(pt[0], pt[1]);
    for (const auto& d : vertices) take(d.p[0], d.p[1]);
    for (const auto& d : tangent_points) take(d.p[0], d.p[1]);
    for (double r : ring_radii) {
        take(-r, -r);
        take(r, r);
    }
    if (!any) {
        lo_x = lo_y = -1.0;
        hi_x = hi_y = 1.0;
    }
    min_x = lo_x - margin;
    min_y = lo_y - margin;
    max_x = hi_x + margin;
    max_y = hi_y + margin;
}

void SvgScene::add_line(double a, double b, double c) {
    // Intersect with the viewport rectangle.
    std::vector<std::array<double, 2>> hits;
    auto push = [&](double x, double y) {
        const double eps = 1e-9;
        if (x < min_x - eps || x > max_x + eps || y < min_y - eps || y > max_y + eps) return;
        for (const auto& h : hits)
            if (std::hypot(h[0] - x, h[1] - y) < 1e-9) return;
        hits.push_back({x, y});
    };
    if (std::abs(b) > 1e-15) {
        push(min_x, -(a * min_x + c) / b);
        push(max_x, -(a * max_x + c) / b);
    }
    if (std::abs(a) > 1e-15) {
        push(-(b * min_y + c) / a, min_y);
        push(-(b * max_y + c) / a, max_y);
    }
    if (hits.size() >= 2) lines.push_back({hits[0], hits[1]});
}

std::string svg_to_string(const SvgScene& scene) {
    std::ostringstream out;
    const double w = scene.max_x - scene.min_x;
    const double h = scene.max_y - scene.min_y;
    // World y points up; emit with y negated and a shifted viewBox.
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
        << fmt(scene.min_x) << " " << fmt(-scene.max_y) << " " << fmt(w) << " " << fmt(h)
        << "\" width=\"640\" height=\"640\">\n";

    out << "  <g id=\"alcoves\" stroke=\"none\">\n";
    for (const auto& poly : scene.alcove_fills) {
        out << "    <polygon fill=\"" << poly.fill << "\" points=\"";
        for (size_t i = 0; i < poly.points.size(); ++i) {
            if (i) out << " ";
            out << fmt(poly.points[i][0]) << "," << fmt(-poly.points[i][1]);
        }
        out << "\"/>\n";
    }
    out << "  </g>\n";

    out << "  <g id=\"lines\" stroke=\"#333333\" stroke-width=\"" << fmt(w / 500) << "\">\n";
    for (const auto& seg : scene.lines)
        out << "    <line x1=\"" << fmt(seg.a[0]) << "\" y1=\"" << fmt(-seg.a[1]) << "\" x2=\""
            << fmt(seg.b[0]) << "\" y2=\"" << fmt(-seg.b[1]) << "\"/>\n";
    out << "  </g>\n";

    out << "  <g id=\"rings\" fill=\"none\" stroke=\"#888888\" stroke-dasharray=\"0.05,0.05\" "
           "stroke-width=\""
        << fmt(w / 800) << "\">\n";
    for (double r : scene.ring_radii)
        out << "    <circle cx=\"0\" cy=\"0\" r=\"" << fmt(r) << "\"/>\n";
    out << "  </g>\n";

    out << "  <g id=\"vertices\">\n";
    for (const auto& d : scene.vertices)
        out << "    <circle cx=\"" << fmt(d.p[0]) << "\" cy=\"" << fmt(-d.p[1]) << "\" r=\""
            << fmt(w / 200) << "\" fill=\"" << d.color << "\"/>\n";
    out << "  </g>\n";

    out << "  <g id=\"tangents\">\n";
    for (const auto& d : scene.tangent_points)
        out << "    <circle cx=\"" << fmt(d.p[0]) << "\" cy=\"" << fmt(-d.p[1]) << "\" r=\""
            << fmt(w / 160) << "\" fill=\"" << d.color << "\"/>\n";
    out << "  </g>\n";

    out << "</svg>\n";
    return out.str();
}

void emit_svg(const SvgScene& scene, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open SVG output: " + path);
    out << svg_to_string(scene);
}

SvgScene scene_from_arrangement(const Arrangement& arr) {
    SvgScene scene;
    for (const auto& alc : arr.alcoves()) {
        SvgScene::Polygon poly;
        for (const auto& p : alc.polygon)
            poly.points.push_back({to_double(p.affine_x()), to_double(p.affine_y())});
        poly.fill = kClassFills[0];
        scene.alcove_fills.push_back(std::move(poly));
    }
    for (const auto& v : arr.vertices())
        scene.vertices.push_back(
            {{to_double(v.point.affine_x()), to_double(v.point.affine_y())}, "#aa2222"});
    scene.fit();
    for (const auto& l : arr.lines())
        scene.add_line(to_double(l.a()), to_double(l.b()), to_double(l.c()));
    return scene;
}

SvgScene scene_from_harmonic(const HarmonicSpec& spec, const Arrangement* arr,
                             const AlcoveClassification* cls) {
    SvgScene scene;
    for (int k = 1; k <= spec.max_ring(); ++k) scene.ring_radii.push_back(ring_radius(spec.n, k));
    if (arr) {
        for (size_t a = 0; a < arr->alcoves().size(); ++a) {
            SvgScene::Polygon poly;
            for (const auto& p : arr->alcoves()[a].polygon)
                poly.points.push_back({to_double(p.affine_x()), to_double(p.affine_y())});
            poly.fill = kClassFills[0];
            if (cls) {
                if (static_cast<int>(a) == cls->central) {
                    poly.fill = kClassFills[1];
                } else {
                    bool first = std::find(cls->first_kind.begin(), cls->first_kind.end(),
                                           static_cast<int>(a)) != cls->first_kind.end();
                    poly.fill = first ? kClassFills[2] : kClassFills[3];
                }
            }
            scene.alcove_fills.push_back(std::move(poly));
        }
        for (const auto& v : arr->vertices())
            scene.vertices.push_back(
                {{to_double(v.point.affine_x()), to_double(v.point.affine_y())}, "#aa2222"});
    } else {
        // Metric-only scene: intersections from the float lines.
        for (int i = 0; i < spec.n; ++i) {
            for (int j = i + 1; j < spec.n; ++j) {
                const auto& l1 = spec.lines[i];
                const auto& l2 = spec.lines[j];
                double det = l1[0] * l2[1] - l2[0] * l1[1];
                if (std::abs(det) < 1e-12) continue;  // parallel (even n)
                double x = (l1[1] * l2[2] - l2[1] * l1[2]) / det;
                double y = (l2[0] * l1[2] - l1[0] * l2[2]) / det;
                scene.vertices.push_back({{x, y}, "#aa2222"});
            }
        }
    }
    scene.fit();
    for (const auto& l : spec.lines) scene.add_line(l[0], l[1], l[2]);
    return scene;
}

void add_tangent_overlay(SvgScene& scene, const TangentReport& report) {
    for (const auto& t : report.tangents) {
        if (!t.is_real()) continue;
        scene.tangent_points.push_back({{t.x.real(), t.y.real()}, "#2255cc"});
    }
}

}  // namespace alcove
