#include "alcove/arrangement.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace alcove {
namespace {

struct Dir {
    ExactScalar x, y;
};

// Strict counterclockwise order on nonzero direction vectors, starting from
// the positive x axis. No trigonometry: split into half-planes, then compare
// by cross-product sign.
bool ccw_less(const Dir& u, const Dir& v) {
    auto half = [](const Dir& d) {
        int sy = sign_of(d.y);
        if (sy > 0 || (sy == 0 && sign_of(d.x) > 0)) return 0;
        return 1;
    };
    int hu = half(u), hv = half(v);
    if (hu != hv) return hu < hv;
    return sign_of(u.x * v.y - u.y * v.x) > 0;
}

// Bounded faces are exactly the cycles that turn strictly left at every
// vertex: a face bordering a missing unbounded ray picks up a straight or
// reflex corner where the two collinear edges meet.
bool strictly_convex_ccw(const std::vector<ProjPoint>& poly) {
    const size_t m = poly.size();
    if (m < 3) return false;
    for (size_t i = 0; i < m; ++i) {
        if (orientation(poly[i], poly[(i + 1) % m], poly[(i + 2) % m]) != Orientation::Left)
            return false;
    }
    return true;
}

}  // namespace

PositionReport check_position(const std::vector<ProjLine>& lines) {
    const int n = static_cast<int>(lines.size());
    if (n < 2) throw GeomError("need at least 2 lines");
    PositionReport rep;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (lines[i] == lines[j]) {
                rep.kind = PositionReport::Kind::Degenerate;
                rep.duplicate_pair = {i, j};
                return rep;
            }
            if (lines[i].parallel_to(lines[j])) rep.parallel_pairs.emplace_back(i, j);
        }
    }
    // Concurrency: a third line through any pairwise intersection.
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (lines[i].parallel_to(lines[j])) continue;
            ProjPoint p = intersect(lines[i], lines[j]);
            for (int k = j + 1; k < n; ++k) {
                if (lines[k].contains(p)) {
                    rep.kind = PositionReport::Kind::Degenerate;
                    rep.concurrent_triple = {i, j, k};
                    return rep;
                }
            }
        }
    }
    rep.kind = rep.parallel_pairs.empty() ? PositionReport::Kind::BoundedGeneral
                                          : PositionReport::Kind::GeneralWithInfinity;
    return rep;
}

Arrangement Arrangement::build(std::vector<ProjLine> lines) {
    PositionReport rep = check_position(lines);
    if (!rep.bounded_general()) {
        std::string why = "lines are not in bounded general position: ";
        if (rep.duplicate_pair)
            why += "duplicate pair (" + std::to_string(rep.duplicate_pair->first) + "," +
                   std::to_string(rep.duplicate_pair->second) + ")";
        else if (rep.concurrent_triple)
            why += "concurrent triple (" + std::to_string((*rep.concurrent_triple)[0]) + "," +
                   std::to_string((*rep.concurrent_triple)[1]) + "," +
                   std::to_string((*rep.concurrent_triple)[2]) + ")";
        else
            why += std::to_string(rep.parallel_pairs.size()) + " parallel pair(s)";
        throw NotBoundedGeneralPosition(why);
    }

    Arrangement arr;
    arr.lines_ = std::move(lines);
    const int n = static_cast<int>(arr.lines_.size());

    // All pairwise intersections; bounded position guarantees they are affine.
    std::vector<std::vector<int>> on_line(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            ProjPoint p = intersect(arr.lines_[i], arr.lines_[j]);
            int id = static_cast<int>(arr.vertices_.size());
            arr.vertices_.push_back({std::move(p), i, j});
            on_line[i].push_back(id);
            on_line[j].push_back(id);
        }
    }

    // Bounded edges: consecutive vertices along each line.
    for (int li = 0; li < n; ++li) {
        auto& ids = on_line[li];
        const ProjLine& l = arr.lines_[li];
        // Parameterize by the dot product with the line direction (b, -a).
        auto param = [&](int v) {
            const ProjPoint& p = arr.vertices_[v].point;
            return l.b() * p.affine_x() - l.a() * p.affine_y();
        };
        std::sort(ids.begin(), ids.end(), [&](int u, int v) { return param(u) < param(v); });
        for (size_t k = 0; k + 1 < ids.size(); ++k) {
            int h = static_cast<int>(arr.half_edges_.size());
            arr.half_edges_.push_back({ids[k], ids[k + 1], h + 1, -1, li, -1});
            arr.half_edges_.push_back({ids[k + 1], ids[k], h, -1, li, -1});
        }
    }

    // Rotational order of outgoing half-edges around each vertex.
    std::vector<std::vector<int>> outgoing(arr.vertices_.size());
    for (int h = 0; h < static_cast<int>(arr.half_edges_.size()); ++h)
        outgoing[arr.half_edges_[h].origin].push_back(h);
    auto direction = [&](int h) {
        const ProjPoint& a = arr.vertices_[arr.half_edges_[h].origin].point;
        const ProjPoint& b = arr.vertices_[arr.half_edges_[h].target].point;
        return Dir{b.affine_x() - a.affine_x(), b.affine_y() - a.affine_y()};
    };
    for (auto& out : outgoing) {
        std::sort(out.begin(), out.end(),
                  [&](int h1, int h2) { return ccw_less(direction(h1), direction(h2)); });
    }

    // next(h) = predecessor of twin(h) in counterclockwise order at the head
    // vertex; faces then keep their interior on the left.
    for (int h = 0; h < static_cast<int>(arr.half_edges_.size()); ++h) {
        const auto& out = outgoing[arr.half_edges_[h].target];
        int tw = arr.half_edges_[h].twin;
        auto it = std::find(out.begin(), out.end(), tw);
        size_t idx = static_cast<size_t>(it - out.begin());
        arr.half_edges_[h].next = out[(idx + out.size() - 1) % out.size()];
    }

    // Trace face cycles. Bounded faces come out counterclockwise.
    for (int h0 = 0; h0 < static_cast<int>(arr.half_edges_.size()); ++h0) {
        if (arr.half_edges_[h0].face != -1) continue;
        int f = static_cast<int>(arr.faces_.size());
        Face face;
        int h = h0;
        do {
            arr.half_edges_[h].face = f;
            face.half_edges.push_back(h);
            h = arr.half_edges_[h].next;
        } while (h != h0);

        std::vector<ProjPoint> poly;
        poly.reserve(face.half_edges.size());
        for (int he : face.half_edges) poly.push_back(arr.vertices_[arr.half_edges_[he].origin].point);
        face.bounded = strictly_convex_ccw(poly);

        if (face.bounded) {
            Alcove alc;
            alc.face = f;
            for (int he : face.half_edges) {
                alc.vertex_ids.push_back(arr.half_edges_[he].origin);
                alc.boundary_lines.push_back(arr.half_edges_[he].line);
            }
            alc.polygon = std::move(poly);
            alc.lines_sorted = alc.boundary_lines;
            std::sort(alc.lines_sorted.begin(), alc.lines_sorted.end());
            arr.alcoves_.push_back(std::move(alc));
        }
        arr.faces_.push_back(std::move(face));
    }
    return arr;
}

std::vector<std::pair<int, int>> Arrangement::edge_alcove_degrees() const {
    std::vector<std::pair<int, int>> deg;
    for (int h = 0; h < static_cast<int>(half_edges_.size()); h += 2) {
        int d = 0;
        if (faces_[half_edges_[h].face].bounded) ++d;
        if (faces_[half_edges_[h + 1].face].bounded) ++d;
        deg.emplace_back(h, d);
    }
    return deg;
}

std::optional<int> Arrangement::find_vertex(const ProjPoint& p) const {
    for (int v = 0; v < static_cast<int>(vertices_.size()); ++v)
        if (vertices_[v].point == p) return v;
    return std::nullopt;
}

AlcoveIntersection Arrangement::alcove_intersection(const Alcove& a, const Alcove& b) const {
    std::vector<int> shared;
    for (int va : a.vertex_ids)
        for (int vb : b.vertex_ids)
            if (va == vb) shared.push_back(va);

    AlcoveIntersection res;
    if (shared.empty()) return res;
    if (shared.size() == 1) {
        res.kind = AlcoveIntersection::Kind::Vertex;
        res.vertex_id = shared[0];
        return res;
    }

    auto edges_of = [](const Alcove& alc) {
        std::vector<std::pair<int, int>> es;
        const size_t m = alc.vertex_ids.size();
        for (size_t i = 0; i < m; ++i) {
            int u = alc.vertex_ids[i], v = alc.vertex_ids[(i + 1) % m];
            es.emplace_back(std::min(u, v), std::max(u, v));
        }
        return es;
    };
    auto ea = edges_of(a), eb = edges_of(b);
    for (const auto& e : ea) {
        if (std::find(eb.begin(), eb.end(), e) != eb.end()) {
            res.kind = AlcoveIntersection::Kind::Edge;
            res.edge_vertices = e;
            return res;
        }
    }
    throw GeomError("alcoves share vertices but no edge; arrangement invariant broken");
}

int Arrangement::vertex_number(const std::vector<ProjPoint>& poly) const {
    if (poly.size() < 3) throw InvalidPolygon("polygon needs at least 3 vertices");
    std::vector<int> corner_ids;
    for (const auto& p : poly) {
        auto v = find_vertex(p);
        if (!v) throw InvalidPolygon("polygon vertex is not an arrangement vertex");
        corner_ids.push_back(*v);
    }
    std::vector<ProjLine> edge_lines;
    for (size_t i = 0; i < poly.size(); ++i)
        edge_lines.push_back(line_through(poly[i], poly[(i + 1) % poly.size()]));
    for (size_t i = 0; i < edge_lines.size(); ++i)
        for (size_t j = i + 1; j < edge_lines.size(); ++j)
            if (edge_lines[i] == edge_lines[j])
                throw InvalidPolygon("polygon edges must lie on distinct lines");

    int count = 0;
    for (int v = 0; v < static_cast<int>(vertices_.size()); ++v) {
        Region r = point_in_convex_polygon(vertices_[v].point, poly);
        if (r == Region::Interior) {
            ++count;
        } else if (r == Region::OnBoundary &&
                   std::find(corner_ids.begin(), corner_ids.end(), v) == corner_ids.end()) {
            ++count;
        }
    }
    return count;
}

std::vector<Alcove> enumerate_alcoves(const Arrangement& arr) { return arr.alcoves(); }

Arrangement insert_line(const Arrangement& arr, const ProjLine& l) {
    const size_t prior_n = arr.lines().size();
    const size_t prior_alcoves = arr.alcoves().size();
    std::vector<ProjLine> lines = arr.lines();
    lines.push_back(l);
    Arrangement next = Arrangement::build(std::move(lines));
    if (prior_n >= 3 && next.alcoves().size() != prior_alcoves + (prior_n - 1))
        throw GeomError("incremental alcove delta mismatch");
    return next;
}

}  // namespace alcove
