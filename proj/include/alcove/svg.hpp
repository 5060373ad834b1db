#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "alcove/arrangement.hpp"
#include "alcove/degeneration.hpp"
#include "alcove/harmonic.hpp"

namespace alcove {

// World-space scene with fixed layer z-order: alcove fills, lines, rings,
// vertices, tangent points. Emission is deterministic (fixed 6-decimal
// formatting), so identical scenes give byte-identical SVG.
struct SvgScene {
    double min_x = -1.5, min_y = -1.5, max_x = 1.5, max_y = 1.5;

    struct Polygon {
        std::vector<std::array<double, 2>> points;
        std::string fill;
    };
    struct Segment {
        std::array<double, 2> a, b;
    };
    struct Dot {
        std::array<double, 2> p;
        std::string color;
    };

    std::vector<Polygon> alcove_fills;
    std::vector<Segment> lines;
    std::vector<double> ring_radii;  // circles centred on the origin
    std::vector<Dot> vertices;
    std::vector<Dot> tangent_points;

    void fit(double margin = 0.5);
    /// Clips an affine line a*x + b*y + c = 0 to the viewport.
    void add_line(double a, double b, double c);
};

std::string svg_to_string(const SvgScene& scene);
void emit_svg(const SvgScene& scene, const std::string& path);

SvgScene scene_from_arrangement(const Arrangement& arr);
SvgScene scene_from_harmonic(const HarmonicSpec& spec, const Arrangement* arr = nullptr,
                             const AlcoveClassification* cls = nullptr);
void add_tangent_overlay(SvgScene& scene, const TangentReport& report);

}  // namespace alcove
