#include "alcove/report.hpp"

namespace alcove {

Json position_report_json(const PositionReport& rep) {
    Json j;
    switch (rep.kind) {
        case PositionReport::Kind::BoundedGeneral:
            j["position"] = "bounded_general";
            break;
        case PositionReport::Kind::GeneralWithInfinity:
            j["position"] = "general_with_infinity";
            break;
        case PositionReport::Kind::Degenerate:
            j["position"] = "degenerate";
            break;
    }
    if (!rep.parallel_pairs.empty()) {
        Json pairs = Json::array();
        for (const auto& [a, b] : rep.parallel_pairs) pairs.push_back({a, b});
        j["parallel_pairs"] = pairs;
    }
    if (rep.concurrent_triple)
        j["concurrent_triple"] = {(*rep.concurrent_triple)[0], (*rep.concurrent_triple)[1],
                                  (*rep.concurrent_triple)[2]};
    if (rep.duplicate_pair)
        j["duplicate_pair"] = {rep.duplicate_pair->first, rep.duplicate_pair->second};
    return j;
}

Json arrangement_report(const Arrangement& arr) {
    Json j;
    j["n"] = arr.lines().size();
    j["vertices"] = arr.vertices().size();
    j["edges"] = arr.edge_count();
    j["alcoves"] = arr.alcoves().size();

    Json polys = Json::array();
    for (const auto& alc : arr.alcoves()) {
        Json poly = Json::array();
        for (const auto& p : alc.polygon)
            poly.push_back({rational_to_string(p.affine_x()), rational_to_string(p.affine_y())});
        polys.push_back(poly);
    }
    j["alcove_polygons"] = polys;

    size_t deg1 = 0, deg2 = 0;
    for (const auto& [edge, d] : arr.edge_alcove_degrees()) {
        if (d == 1) ++deg1;
        if (d == 2) ++deg2;
    }
    j["edge_alcove_degrees"] = {{"1", deg1}, {"2", deg2}};
    return j;
}

Json harmonic_report(const HarmonicSpec& spec, const std::vector<RingReport>& rings,
                     const Arrangement* arr, const AlcoveClassification* cls) {
    Json j;
    j["n"] = spec.n;
    Json ringlist = Json::array();
    for (const auto& r : rings) {
        ringlist.push_back({{"k", r.k},
                            {"predicted_radius", r.predicted_radius},
                            {"worst_radius_error", r.worst_radius_error},
                            {"worst_angle_error", r.worst_angle_error}});
    }
    j["rings"] = ringlist;
    if (!spec.parallel_pairs.empty()) {
        Json pairs = Json::array();
        for (const auto& [a, b] : spec.parallel_pairs) pairs.push_back({a, b});
        j["parallel_pairs"] = pairs;
    }
    if (arr) {
        j["alcoves"] = arr->alcoves().size();
        j["vertices"] = arr->vertices().size();
    }
    if (cls) {
        size_t second = 0;
        for (const auto& [jj, v] : cls->second_kind) second += v.size();
        j["classes"] = {{"central", 1}, {"first", cls->first_kind.size()}, {"second", second}};
        if (spec.n >= 5) {
            ClassSplit cs = class_split(spec.n);
            j["class_split"] = {{"m", cs.m},
                                {"central_share", cs.central_share},
                                {"first_share", cs.first_share},
                                {"second_share", cs.second_share}};
        }
        j["genus"] = static_cast<long long>(spec.n - 1) * (spec.n - 2) / 2;
    }
    return j;
}

Json degeneration_report(const CurveFamily& family, const std::vector<TangentReport>& reports) {
    Json j;
    const int n = static_cast<int>(family.lines.size());
    j["n"] = n;
    j["seed"] = family.seed;
    j["expected_tangents"] = n * (n - 1);
    j["genus"] = static_cast<long long>(n - 1) * (n - 2) / 2;
    j["family"] = "pencil";  // generic pencil to the line union, not the
                             // bitangency-constrained variation
    Json runs = Json::array();
    for (const auto& rep : reports) {
        Json run;
        run["s"] = rep.s;
        Json pts = Json::array();
        for (const auto& t : rep.tangents) {
            pts.push_back({{"x_re", t.x.real()},
                           {"x_im", t.x.imag()},
                           {"y_re", t.y.real()},
                           {"y_im", t.y.imag()},
                           {"residual", t.residual},
                           {"real", t.is_real()}});
        }
        run["tangents"] = pts;
        Json clusters = Json::array();
        for (const auto& [node, count] : rep.clusters)
            clusters.push_back({{"lines", {node.first, node.second}}, {"count", count}});
        run["clusters"] = clusters;
        run["unclustered"] = rep.unclustered;
        run["two_per_node"] = rep.two_per_node;
        runs.push_back(run);
    }
    j["runs"] = runs;
    return j;
}

}  // namespace alcove
