#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "alcove/geom.hpp"

namespace alcove {

struct DuplicateLine : GeomError {
    DuplicateLine(int i, int j)
        : GeomError("duplicate lines at indices " + std::to_string(i) + ", " + std::to_string(j)),
          first(i),
          second(j) {}
    int first, second;
};

struct NotBoundedGeneralPosition : GeomError {
    using GeomError::GeomError;
};

struct InvalidPolygon : GeomError {
    using GeomError::GeomError;
};

// Result of the position check. Degenerate carries a witness: either a
// concurrent line triple or a duplicate pair.
struct PositionReport {
    enum class Kind { BoundedGeneral, GeneralWithInfinity, Degenerate };
    Kind kind = Kind::BoundedGeneral;
    std::vector<std::pair<int, int>> parallel_pairs;
    std::optional<std::array<int, 3>> concurrent_triple;
    std::optional<std::pair<int, int>> duplicate_pair;

    bool bounded_general() const { return kind == Kind::BoundedGeneral; }
};

PositionReport check_position(const std::vector<ProjLine>& lines);

struct ArrVertex {
    ProjPoint point;
    int line_i, line_j;  // line_i < line_j
};

struct HalfEdge {
    int origin;  // vertex id
    int target;
    int twin;
    int next;  // next half-edge around the face (interior on the left)
    int line;  // carrying line index
    int face;
};

struct Face {
    std::vector<int> half_edges;  // one traversal cycle
    bool bounded;
};

// A bounded face. The vertex cycle is counterclockwise and strictly convex.
struct Alcove {
    int face = -1;
    std::vector<int> vertex_ids;
    std::vector<ProjPoint> polygon;
    std::vector<int> boundary_lines;  // per boundary edge, in cycle order
    std::vector<int> lines_sorted;    // the same set, sorted ascending
};

struct AlcoveIntersection {
    enum class Kind { Empty, Vertex, Edge };
    Kind kind = Kind::Empty;
    std::optional<int> vertex_id;
    std::optional<std::pair<int, int>> edge_vertices;
};

class Arrangement {
public:
    /// Requires check_position(lines) == BoundedGeneral; throws
    /// NotBoundedGeneralPosition otherwise.
    static Arrangement build(std::vector<ProjLine> lines);

    const std::vector<ProjLine>& lines() const { return lines_; }
    const std::vector<ArrVertex>& vertices() const { return vertices_; }
    const std::vector<HalfEdge>& half_edges() const { return half_edges_; }
    const std::vector<Face>& faces() const { return faces_; }
    const std::vector<Alcove>& alcoves() const { return alcoves_; }

    size_t edge_count() const { return half_edges_.size() / 2; }

    /// For each bounded edge (indexed by the lower of its two half-edge ids),
    /// the number of alcoves it borders (1 or 2).
    std::vector<std::pair<int, int>> edge_alcove_degrees() const;

    AlcoveIntersection alcove_intersection(const Alcove& a, const Alcove& b) const;

    /// Vertices strictly inside poly or strictly inside its boundary
    /// segments. poly vertices must be arrangement vertices with consecutive
    /// pairs spanning pairwise distinct lines.
    int vertex_number(const std::vector<ProjPoint>& poly) const;

    std::optional<int> find_vertex(const ProjPoint& p) const;

private:
    Arrangement() = default;

    std::vector<ProjLine> lines_;
    std::vector<ArrVertex> vertices_;
    std::vector<HalfEdge> half_edges_;
    std::vector<Face> faces_;
    std::vector<Alcove> alcoves_;
};

std::vector<Alcove> enumerate_alcoves(const Arrangement& arr);

/// Rebuilds with the extra line and asserts the alcove delta predicted by
/// the incremental argument (prior line count minus one).
Arrangement insert_line(const Arrangement& arr, const ProjLine& l);

}  // namespace alcove
