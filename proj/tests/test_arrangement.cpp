#include <doctest.h>

#include <random>

#include "alcove/arrangement.hpp"
#include "oracles.hpp"

using namespace alcove;

namespace {

std::vector<ProjLine> triangle_lines() {
    return {ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(1, 1, -1)};
}

}  // namespace

TEST_CASE("check_position basics") {
    CHECK(check_position(triangle_lines()).bounded_general());

    std::vector<ProjLine> concurrent{ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(1, 1, 0)};
    PositionReport rep = check_position(concurrent);
    CHECK(rep.kind == PositionReport::Kind::Degenerate);
    REQUIRE(rep.concurrent_triple.has_value());
    CHECK((*rep.concurrent_triple) == std::array<int, 3>{0, 1, 2});

    std::vector<ProjLine> dup{ProjLine(1, 0, 0), ProjLine(2, 0, 0)};
    rep = check_position(dup);
    CHECK(rep.kind == PositionReport::Kind::Degenerate);
    REQUIRE(rep.duplicate_pair.has_value());

    std::vector<ProjLine> parallel{ProjLine(1, 0, 0), ProjLine(1, 0, -1), ProjLine(0, 1, 0)};
    rep = check_position(parallel);
    CHECK(rep.kind == PositionReport::Kind::GeneralWithInfinity);
    CHECK(rep.parallel_pairs == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("triangle arrangement") {
    Arrangement arr = Arrangement::build(triangle_lines());
    CHECK(arr.vertices().size() == 3);
    CHECK(arr.edge_count() == 3);
    REQUIRE(arr.alcoves().size() == 1);
    const Alcove& alc = arr.alcoves()[0];
    CHECK(alc.vertex_ids.size() == 3);
    CHECK(alc.lines_sorted == std::vector<int>{0, 1, 2});
    CHECK(arr.vertex_number(alc.polygon) == 0);
}

TEST_CASE("build rejects degenerate input") {
    std::vector<ProjLine> concurrent{ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(1, 1, 0)};
    CHECK_THROWS_AS(Arrangement::build(concurrent), NotBoundedGeneralPosition);
    std::vector<ProjLine> parallel{ProjLine(1, 0, 0), ProjLine(1, 0, -1), ProjLine(0, 1, 0)};
    CHECK_THROWS_AS(Arrangement::build(parallel), NotBoundedGeneralPosition);
}

TEST_CASE("alcove count matches the sign-vector oracle") {
    std::mt19937 rng(101);
    for (int n = 3; n <= 6; ++n) {
        for (int trial = 0; trial < 3; ++trial) {
            auto lines = testing::random_bounded_gp_lines(n, rng);
            Arrangement arr = Arrangement::build(lines);
            CHECK(arr.alcoves().size() == testing::bounded_cells_oracle(lines));
            CHECK(arr.alcoves().size() == static_cast<size_t>((n - 1) * (n - 2) / 2));
        }
    }
}

TEST_CASE("alcove structure invariants on random arrangements") {
    std::mt19937 rng(2024);
    for (int n : {4, 6, 8}) {
        auto lines = testing::random_bounded_gp_lines(n, rng);
        Arrangement arr = Arrangement::build(lines);
        CHECK(arr.vertices().size() == static_cast<size_t>(n * (n - 1) / 2));
        CHECK(arr.edge_count() == static_cast<size_t>(n * (n - 2)));

        size_t boundary_edge_sum = 0;
        size_t border1 = 0, border2 = 0;
        for (const auto& [e, d] : arr.edge_alcove_degrees()) {
            CHECK(d >= 1);
            CHECK(d <= 2);
            if (d == 1) ++border1;
            if (d == 2) ++border2;
        }
        for (const auto& alc : arr.alcoves()) {
            boundary_edge_sum += alc.vertex_ids.size();
            // Strict convexity, counterclockwise.
            const auto& poly = alc.polygon;
            for (size_t i = 0; i < poly.size(); ++i)
                CHECK(orientation(poly[i], poly[(i + 1) % poly.size()],
                                  poly[(i + 2) % poly.size()]) == Orientation::Left);
            // Boundary lines pairwise distinct.
            auto ls = alc.lines_sorted;
            CHECK(std::adjacent_find(ls.begin(), ls.end()) == ls.end());
            CHECK(arr.vertex_number(alc.polygon) == 0);
        }
        CHECK(boundary_edge_sum == border1 + 2 * border2);
    }
}

TEST_CASE("pairwise alcove intersections are empty, a vertex, or an edge") {
    std::mt19937 rng(5);
    auto lines = testing::random_bounded_gp_lines(5, rng);
    Arrangement arr = Arrangement::build(lines);
    const auto& alcoves = arr.alcoves();
    REQUIRE(alcoves.size() == 6);
    bool saw_edge = false, saw_empty = false;
    for (size_t i = 0; i < alcoves.size(); ++i) {
        for (size_t j = i + 1; j < alcoves.size(); ++j) {
            AlcoveIntersection res = arr.alcove_intersection(alcoves[i], alcoves[j]);
            if (res.kind == AlcoveIntersection::Kind::Edge) saw_edge = true;
            if (res.kind == AlcoveIntersection::Kind::Empty) saw_empty = true;
            // No interior overlap: each alcove's centroid stays outside the other.
            auto centroid = [](const Alcove& a) {
                ExactScalar cx = 0, cy = 0;
                for (const auto& p : a.polygon) {
                    cx += p.affine_x();
                    cy += p.affine_y();
                }
                auto m = static_cast<int>(a.polygon.size());
                return ProjPoint::affine(cx / m, cy / m);
            };
            CHECK(point_in_convex_polygon(centroid(alcoves[i]), alcoves[j].polygon) ==
                  Region::Exterior);
            CHECK(point_in_convex_polygon(centroid(alcoves[j]), alcoves[i].polygon) ==
                  Region::Exterior);
        }
    }
    CHECK(saw_edge);
    CHECK(saw_empty);
}

TEST_CASE("insert_line increments the alcove count by n-1") {
    std::mt19937 rng(77);
    auto lines = testing::random_bounded_gp_lines(6, rng);
    Arrangement arr = Arrangement::build({lines.begin(), lines.begin() + 3});
    CHECK(arr.alcoves().size() == 1);
    for (int n = 3; n < 6; ++n) {
        arr = insert_line(arr, lines[n]);
        CHECK(arr.alcoves().size() == static_cast<size_t>(n * (n - 1) / 2));
    }
    // Total equals a from-scratch build (order independence).
    CHECK(arr.alcoves().size() == Arrangement::build(lines).alcoves().size());
}

TEST_CASE("vertex_number counts enclosed crossings") {
    // Both axes plus two slanted lines crossing the x-axis at 2 and 3.
    std::vector<ProjLine> lines{ProjLine(0, 1, 0), ProjLine(1, 0, 0), ProjLine(1, 1, -2),
                                ProjLine(1, -1, -3)};
    Arrangement arr = Arrangement::build(lines);
    // Triangle on the arrangement vertices (0,0), (3,0), (0,2); the vertex
    // (2,0) lies strictly inside its bottom edge.
    std::vector<ProjPoint> big{ProjPoint::affine(0, 0), ProjPoint::affine(3, 0),
                               ProjPoint::affine(0, 2)};
    CHECK(arr.vertex_number(big) == 1);
    CHECK_THROWS_AS(arr.vertex_number({ProjPoint::affine(0, 0), ProjPoint::affine(1, 1),
                                       ProjPoint::affine(0, 2)}),
                    InvalidPolygon);
}
