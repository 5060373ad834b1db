#include <doctest.h>

#include <cmath>

#include "alcove/harmonic.hpp"

using namespace alcove;

namespace {

// Independent radius oracle: intersect the float edge-lines l_0 and l_k
// directly and take the norm.
double radius_oracle(int n, int k) {
    HarmonicSpec spec = generate(n, /*rationalize=*/false);
    const auto& l1 = spec.lines[0];
    const auto& l2 = spec.lines[k % n];
    double det = l1[0] * l2[1] - l2[0] * l1[1];
    double x = (l1[1] * l2[2] - l2[1] * l1[2]) / det;
    double y = (l2[0] * l1[2] - l1[0] * l2[2]) / det;
    return std::hypot(x, y);
}

}  // namespace

TEST_CASE("ring_radius closed form") {
    CHECK(ring_radius(5, 1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ring_radius(5, 2) == doctest::Approx(radius_oracle(5, 2)).epsilon(1e-12));
    CHECK(ring_radius(5, 2) == doctest::Approx(2.618033988749895).epsilon(1e-12));
    CHECK(ring_radius(7, 3) == doctest::Approx(radius_oracle(7, 3)).epsilon(1e-12));
    CHECK(ring_radius(7, 3) ==
          doctest::Approx(std::sin(5 * M_PI / 14) / std::sin(M_PI / 14)).epsilon(1e-12));
    CHECK_THROWS_AS(ring_radius(6, 3), OutOfRangeK);  // parallel pair, ring at infinity
    CHECK_THROWS_AS(ring_radius(5, 3), OutOfRangeK);
    CHECK_THROWS_AS(ring_radius(9, 0), OutOfRangeK);
}

TEST_CASE("ring_radius is strictly increasing in k for odd n") {
    for (int n = 5; n <= 25; n += 2) {
        for (int k = 1; k < (n - 1) / 2; ++k) CHECK(ring_radius(n, k + 1) > ring_radius(n, k));
    }
}

TEST_CASE("generate: basic structure") {
    HarmonicSpec tri = generate(3);
    CHECK(tri.lines.size() == 3);
    CHECK(tri.parallel_pairs.empty());
    auto rings3 = verify_rings(tri, 1e-12);
    REQUIRE(rings3.size() == 1);
    CHECK(rings3[0].predicted_radius == doctest::Approx(1.0));

    HarmonicSpec pent = generate(5);
    auto rings5 = verify_rings(pent, 1e-9);
    CHECK(rings5.size() == 2);

    HarmonicSpec quad = generate(4);
    CHECK(quad.parallel_pairs.size() == 2);
    CHECK(quad.max_ring() == 1);
}

TEST_CASE("measured radii match the formula for n up to 25") {
    for (int n = 3; n <= 25; ++n) {
        HarmonicSpec spec = generate(n, /*rationalize=*/false);
        CHECK_NOTHROW(verify_rings(spec, 1e-9));
    }
}

TEST_CASE("rationalized lines stay in bounded general position for odd n") {
    for (int n = 3; n <= 15; n += 2) {
        HarmonicSpec spec = generate(n);
        REQUIRE(spec.rationalized_lines.size() == static_cast<size_t>(n));
        CHECK(check_position(spec.rationalized_lines).bounded_general());
    }
}

TEST_CASE("rationalized even n keeps exactly n/2 parallel pairs") {
    for (int n : {4, 6, 8}) {
        HarmonicSpec spec = generate(n);
        PositionReport rep = check_position(spec.rationalized_lines);
        CHECK(rep.kind == PositionReport::Kind::GeneralWithInfinity);
        CHECK(rep.parallel_pairs.size() == static_cast<size_t>(n) / 2);
    }
}

TEST_CASE("classification partitions the alcoves") {
    for (int n = 3; n <= 15; n += 2) {
        HarmonicSpec spec = generate(n);
        Arrangement arr = Arrangement::build(spec.rationalized_lines);
        REQUIRE(arr.alcoves().size() == static_cast<size_t>((n - 1) * (n - 2) / 2));
        AlcoveClassification cls = classify_alcoves(spec, arr);
        CHECK(cls.total() == arr.alcoves().size());
        if (n >= 5) CHECK(cls.first_kind.size() == static_cast<size_t>(n));
        size_t second = 0;
        for (const auto& [j, v] : cls.second_kind) {
            CHECK(v.size() == static_cast<size_t>(n));
            second += v.size();
        }
        if (n >= 7)
            CHECK(second == static_cast<size_t>(n) * (n - 5) / 2);
        else
            CHECK(second == 0);
        // The central alcove is the inscribed n-gon: all n lines on its boundary.
        CHECK(arr.alcoves()[cls.central].lines_sorted.size() == static_cast<size_t>(n));
    }
}

TEST_CASE("classify requires odd n") {
    HarmonicSpec pent = generate(5);
    Arrangement arr = Arrangement::build(pent.rationalized_lines);
    HarmonicSpec quad = generate(4);
    CHECK_THROWS_AS(classify_alcoves(quad, arr), GeomError);
}

TEST_CASE("class_split identity") {
    ClassSplit c5 = class_split(5);
    CHECK(c5.m == 20);
    CHECK(c5.central_share == 10);
    CHECK(c5.first_share == 10);
    CHECK(c5.second_share == 0);
    ClassSplit c7 = class_split(7);
    CHECK(c7.m == 42);
    CHECK(c7.central_share == 14);
    CHECK(c7.first_share == 14);
    CHECK(c7.second_share == 14);
    for (int n = 5; n <= 15; n += 2) {
        ClassSplit cs = class_split(n);
        CHECK(cs.m == static_cast<long long>(n) * (n - 1));
        CHECK(cs.central_share + cs.first_share + cs.second_share == cs.m);
    }
}
