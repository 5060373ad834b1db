#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "alcove/io.hpp"
#include "alcove/report.hpp"
#include "alcove/svg.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitError = 1;    // operational error (I/O, parse, bad flags)
constexpr int kExitChecks = 2;   // checks ran and failed

void write_json(const alcove::Json& j, const std::string& path) {
    if (path.empty()) return;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open JSON output: " + path);
    out << j.dump(2) << "\n";
}

double default_tol() {
    if (const char* env = std::getenv("ALCOVE_DEFAULT_TOL")) return std::atof(env);
    return 1e-9;
}

std::vector<double> parse_s_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    if (out.empty()) throw std::runtime_error("empty s schedule");
    return out;
}

int cmd_arrange(const std::string& input, const std::string& json_path,
                const std::string& svg_path) {
    auto lines = alcove::load_line_file(input);
    alcove::PositionReport pos = alcove::check_position(lines);
    alcove::Json j = alcove::position_report_json(pos);
    if (!pos.bounded_general()) {
        j["checks_passed"] = false;
        write_json(j, json_path);
        std::cout << j.dump(2) << "\n";
        return kExitChecks;
    }

    alcove::Arrangement arr = alcove::Arrangement::build(lines);
    alcove::Json rep = alcove::arrangement_report(arr);
    for (auto& [k, v] : rep.items()) j[k] = v;

    const size_t n = lines.size();
    bool ok = arr.vertices().size() == n * (n - 1) / 2 &&
              arr.alcoves().size() == (n - 1) * (n - 2) / 2;
    for (const auto& [e, d] : arr.edge_alcove_degrees())
        if (d < 1 || d > 2) ok = false;
    j["checks_passed"] = ok;

    write_json(j, json_path);
    if (!svg_path.empty()) alcove::emit_svg(alcove::scene_from_arrangement(arr), svg_path);
    std::cout << j.dump(2) << "\n";
    return ok ? kExitPass : kExitChecks;
}

int cmd_harmonic(int n, double tol, bool classify, long max_den, const std::string& json_path,
                 const std::string& svg_path) {
    alcove::HarmonicSpec spec = alcove::generate(n, /*rationalize=*/true, max_den);
    bool ok = true;
    std::vector<alcove::RingReport> rings;
    try {
        rings = alcove::verify_rings(spec, tol);
    } catch (const alcove::ToleranceExceeded& e) {
        std::cerr << e.what() << "\n";
        ok = false;
    }

    std::optional<alcove::Arrangement> arr;
    std::optional<alcove::AlcoveClassification> cls;
    if (classify) {
        if (n % 2 == 0) throw std::runtime_error("--classify requires odd n");
        arr = alcove::Arrangement::build(spec.rationalized_lines);
        cls = alcove::classify_alcoves(spec, *arr);
        if (cls->total() != arr->alcoves().size()) ok = false;
        size_t second = 0;
        for (const auto& [jj, v] : cls->second_kind) second += v.size();
        if (cls->first_kind.size() != (n >= 5 ? static_cast<size_t>(n) : 0) ||
            second != static_cast<size_t>(n) * (n >= 7 ? (n - 5) / 2 : 0))
            ok = false;
    }
    if (n % 2 == 0 && spec.parallel_pairs.size() != static_cast<size_t>(n) / 2) ok = false;

    alcove::Json j = alcove::harmonic_report(spec, rings, arr ? &*arr : nullptr,
                                             cls ? &*cls : nullptr);
    j["checks_passed"] = ok;
    write_json(j, json_path);
    if (!svg_path.empty())
        alcove::emit_svg(alcove::scene_from_harmonic(spec, arr ? &*arr : nullptr,
                                                     cls ? &*cls : nullptr),
                         svg_path);
    std::cout << j.dump(2) << "\n";
    return ok ? kExitPass : kExitChecks;
}

int cmd_degenerate(const std::string& lines_path, int n_gon, const std::string& s_list,
                   unsigned seed, double cluster_radius, const std::string& json_path,
                   const std::string& svg_path) {
    std::vector<std::array<double, 3>> lines;
    if (!lines_path.empty()) {
        for (const auto& l : alcove::load_line_file(lines_path))
            lines.push_back({alcove::to_double(l.a()), alcove::to_double(l.b()),
                             alcove::to_double(l.c())});
    } else if (n_gon >= 3) {
        alcove::HarmonicSpec spec = alcove::generate(n_gon, /*rationalize=*/false);
        if (n_gon % 2 == 0) throw std::runtime_error("--n-gon must be odd (bounded position)");
        lines = spec.lines;
    } else {
        throw std::runtime_error("either --lines or --n-gon is required");
    }

    std::vector<double> s_values = parse_s_list(s_list);
    std::sort(s_values.rbegin(), s_values.rend());

    alcove::CurveFamily family = alcove::make_pencil(lines, seed, s_values.front());
    auto reports = alcove::run_degeneration(family, s_values, cluster_radius);
    bool ok = reports.back().two_per_node;  // the smallest s must settle

    alcove::Json j = alcove::degeneration_report(family, reports);
    j["checks_passed"] = ok;
    write_json(j, json_path);
    if (!svg_path.empty()) {
        alcove::SvgScene scene;
        for (const auto& nd : alcove::line_nodes(lines))
            scene.vertices.push_back({nd.second, "#aa2222"});
        alcove::add_tangent_overlay(scene, reports.back());
        scene.fit();
        for (const auto& l : lines) scene.add_line(l[0], l[1], l[2]);
        alcove::emit_svg(scene, svg_path);
    }
    std::cout << j.dump(2) << "\n";
    return ok ? kExitPass : kExitChecks;
}

int cmd_report(int n, const std::string& json_path) {
    alcove::Json j;
    j["n"] = n;
    j["vertices"] = n * (n - 1) / 2;
    j["alcoves"] = (n - 1) * (n - 2) / 2;
    j["genus"] = (n - 1) * (n - 2) / 2;
    j["class"] = n * (n - 1);
    if (n >= 5 && n % 2 == 1) {
        alcove::ClassSplit cs = alcove::class_split(n);
        j["class_split"] = {{"m", cs.m},
                            {"central_share", cs.central_share},
                            {"first_share", cs.first_share},
                            {"second_share", cs.second_share}};
        j["class_split_ok"] = cs.central_share + cs.first_share + cs.second_share == cs.m;
    }
    write_json(j, json_path);
    std::cout << j.dump(2) << "\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact line-arrangement engine: alcoves, harmonic n-gon "
                 "arrangements, vertical-tangent degeneration"};
    app.set_config("--config", "", "Read defaults from a key=value file");
    app.require_subcommand(1);

    auto* arrange = app.add_subcommand("arrange", "Build an arrangement from a line file");
    std::string arr_input, arr_json, arr_svg;
    arrange->add_option("--input", arr_input, "Line file (a b c per row)")->required();
    arrange->add_option("--json", arr_json, "JSON report path");
    arrange->add_option("--svg", arr_svg, "SVG output path");

    auto* harmonic = app.add_subcommand("harmonic", "Regular n-gon arrangement checks");
    int h_n = 5;
    double h_tol = default_tol();
    bool h_classify = false;
    long h_maxden = 1000000;
    std::string h_json, h_svg;
    harmonic->add_option("--n", h_n, "Number of polygon sides")->required();
    harmonic->add_option("--tol", h_tol, "Metric tolerance");
    harmonic->add_flag("--classify", h_classify, "Classify alcoves (odd n)");
    harmonic->add_option("--max-den", h_maxden, "Rationalization denominator bound");
    harmonic->add_option("--json", h_json, "JSON report path");
    harmonic->add_option("--svg", h_svg, "SVG output path");

    auto* degen = app.add_subcommand("degenerate", "Vertical-tangent clustering near a line union");
    std::string d_lines, d_s = "1e-2,1e-3,1e-4", d_json, d_svg;
    int d_ngon = 0;
    unsigned d_seed = 42;
    double d_radius = 0.0;
    degen->add_option("--lines", d_lines, "Line file for the degenerate fiber");
    degen->add_option("--n-gon", d_ngon, "Use the regular n-gon lines instead");
    degen->add_option("--s", d_s, "Comma-separated pencil parameters");
    degen->add_option("--seed", d_seed, "Seed for the generic member");
    degen->add_option("--cluster-radius", d_radius, "Cluster radius (0 = auto)");
    degen->add_option("--json", d_json, "JSON report path");
    degen->add_option("--svg", d_svg, "SVG output path");

    auto* report = app.add_subcommand("report", "Closed-form counts for a given n");
    int r_n = 5;
    std::string r_json;
    report->add_option("--n", r_n, "Number of lines")->required();
    report->add_option("--json", r_json, "JSON report path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (arrange->parsed()) return cmd_arrange(arr_input, arr_json, arr_svg);
        if (harmonic->parsed())
            return cmd_harmonic(h_n, h_tol, h_classify, h_maxden, h_json, h_svg);
        if (degen->parsed())
            return cmd_degenerate(d_lines, d_ngon, d_s, d_seed, d_radius, d_json, d_svg);
        if (report->parsed()) return cmd_report(r_n, r_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
