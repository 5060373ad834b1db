#include "alcove/degeneration.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "alcove/univariate.hpp"

namespace alcove {
namespace {

using Cx = std::complex<double>;

Cx eval_poly(const std::vector<double>& coeffs, Cx x) {
    Cx acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Sylvester resultant Res_y(f, g) as a univariate polynomial in x, computed
// by evaluating the determinant at scaled roots of unity and interpolating.
std::vector<Cx> resultant_in_x(const BivariatePoly& f, const BivariatePoly& g) {
    const int m = f.degree_in_y();
    const int r = g.degree_in_y();
    if (m < 1 || r < 0) throw SolverFailure("resultant needs positive y-degree");

    std::vector<std::vector<double>> A(m + 1), B(r + 1);
    for (int k = 0; k <= m; ++k) A[k] = f.coeff_of_y_power(k);
    for (int k = 0; k <= r; ++k) B[k] = g.coeff_of_y_power(k);

    const int deg_bound = r * std::max(0, f.degree_in_x()) + m * std::max(0, g.degree_in_x());
    const int M = deg_bound + 1;
    const double r0 = 1.1703;  // sample circle radius, away from likely roots
    const double step = 2.0 * std::numbers::pi / M;

    std::vector<Cx> dets(M);
    const int dim = m + r;
    Eigen::MatrixXcd S(dim, dim);
    for (int t = 0; t < M; ++t) {
        Cx x = std::polar(r0, step * t);
        S.setZero();
        for (int row = 0; row < r; ++row)
            for (int k = 0; k <= m; ++k) S(row, row + (m - k)) = eval_poly(A[k], x);
        for (int row = 0; row < m; ++row)
            for (int k = 0; k <= r; ++k) S(r + row, row + (r - k)) = eval_poly(B[k], x);
        dets[t] = S.determinant();
    }

    double maxd = 0.0;
    for (const auto& d : dets) maxd = std::max(maxd, std::abs(d));
    // An identically vanishing resultant means f and f_x share a component,
    // so the critical locus is positive-dimensional.
    if (maxd == 0.0) throw SingularCurve("curve and its x-derivative share a common component");
    for (auto& d : dets) d /= maxd;

    // Inverse DFT, then undo the radius scaling per coefficient.
    std::vector<Cx> coeffs(M);
    for (int d = 0; d < M; ++d) {
        Cx sum = 0.0;
        for (int t = 0; t < M; ++t) sum += dets[t] * std::polar(1.0, -step * d * t);
        coeffs[d] = sum / static_cast<double>(M) / std::pow(r0, d);
    }
    return coeffs;
}

struct NewtonResult {
    Cx x, y;
    double residual;
    bool converged;
};

NewtonResult newton_polish(const BivariatePoly& f, const BivariatePoly& fx,
                           const BivariatePoly& fxx, const BivariatePoly& fxy,
                           const BivariatePoly& fy, Cx x, Cx y) {
    auto res_norm = [&](Cx xx, Cx yy) {
        return std::max(std::abs(f.eval(xx, yy)), std::abs(fx.eval(xx, yy)));
    };
    double res = res_norm(x, y);
    for (int it = 0; it < 60 && res > 1e-14; ++it) {
        Cx F0 = f.eval(x, y), F1 = fx.eval(x, y);
        Cx a = fx.eval(x, y), b = fy.eval(x, y);
        Cx c = fxx.eval(x, y), d = fxy.eval(x, y);
        Cx det = a * d - b * c;
        if (std::abs(det) < 1e-300) break;
        Cx dx = (-F0 * d + F1 * b) / det;
        Cx dy = (-a * F1 + c * F0) / det;
        double step = 1.0;
        bool improved = false;
        for (int halving = 0; halving < 12; ++halving) {
            Cx nx = x + step * dx, ny = y + step * dy;
            double nres = res_norm(nx, ny);
            if (nres < res) {
                x = nx;
                y = ny;
                res = nres;
                improved = true;
                break;
            }
            step *= 0.5;
        }
        if (!improved) break;
    }
    return {x, y, res, true};
}

}  // namespace

BivariatePoly product_of_lines(const std::vector<std::array<double, 3>>& lines) {
    BivariatePoly prod = BivariatePoly::constant(1.0);
    for (const auto& l : lines) {
        BivariatePoly lin(1);
        lin.at(1, 0) = l[0];
        lin.at(0, 1) = l[1];
        lin.at(0, 0) = l[2];
        prod = prod * lin;
    }
    return prod;
}

std::vector<TangentPoint> vertical_tangents(const BivariatePoly& f_in, double tol) {
    double cmax = f_in.max_abs_coeff();
    if (cmax == 0.0) throw SolverFailure("zero polynomial");
    BivariatePoly f = f_in.scaled(1.0 / cmax);
    const int n = f.exact_degree(1e-14);
    if (n < 2) throw SolverFailure("degree must be at least 2");
    if (f.degree_in_y() < 1) throw SolverFailure("curve does not depend on y");

    BivariatePoly fx = f.dx();
    BivariatePoly fy = f.dy();
    BivariatePoly fxx = fx.dx();
    BivariatePoly fxy = fx.dy();

    std::vector<Cx> res = resultant_in_x(f, fx);
    std::vector<Cx> xs = univariate_roots(std::move(res), 1e-11);

    // Back-substitute: y roots of f(x*, .), kept when f_x is already small.
    std::vector<TangentPoint> points;
    for (const Cx& xr : xs) {
        const int my = f.degree_in_y();
        std::vector<Cx> ycoeffs(my + 1);
        for (int k = 0; k <= my; ++k) ycoeffs[k] = eval_poly(f.coeff_of_y_power(k), xr);
        std::vector<Cx> ys;
        try {
            ys = univariate_roots(std::move(ycoeffs), 1e-12);
        } catch (const std::exception&) {
            continue;
        }
        for (const Cx& yr : ys) {
            double mag = std::max({1.0, std::abs(xr), std::abs(yr)});
            double scale = std::pow(mag, n);
            if (std::abs(fx.eval(xr, yr)) > 1e-3 * scale) continue;
            NewtonResult nr = newton_polish(f, fx, fxx, fxy, fy, xr, yr);
            double nmag = std::max({1.0, std::abs(nr.x), std::abs(nr.y)});
            double residual = nr.residual / std::pow(nmag, n);
            if (residual > tol) continue;
            TangentPoint tp;
            tp.x = nr.x;
            tp.y = nr.y;
            tp.residual = residual;
            points.push_back(tp);
        }
    }

    // Deduplicate polished points.
    std::vector<TangentPoint> unique;
    for (const auto& p : points) {
        bool dup = false;
        for (const auto& q : unique) {
            double sep = std::abs(p.x - q.x) + std::abs(p.y - q.y);
            if (sep < 1e-6 * (1.0 + std::abs(p.x) + std::abs(p.y))) {
                dup = true;
                break;
            }
        }
        if (!dup) unique.push_back(p);
    }
    if (unique.empty()) throw SolverFailure("no tangent point met the residual target");

    for (const auto& p : unique) {
        double mag = std::max({1.0, std::abs(p.x), std::abs(p.y)});
        if (std::abs(fy.eval(p.x, p.y)) < 1e-8 * std::pow(mag, n))
            throw SingularCurve("curve is singular near a computed tangent point");
    }
    return unique;
}

BivariatePoly CurveFamily::member(double s) const {
    return lines_poly.scaled(1.0 - s) + generic_poly.scaled(s);
}

CurveFamily make_pencil(const std::vector<std::array<double, 3>>& lines, unsigned seed,
                        double s_check) {
    const int n = static_cast<int>(lines.size());
    CurveFamily fam{lines, product_of_lines(lines), BivariatePoly(n), seed};
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int attempt = 0; attempt < 10; ++attempt) {
        BivariatePoly g(n);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n; ++j) g.at(i, j) = uni(rng);
        fam.generic_poly = g;
        try {
            vertical_tangents(fam.member(s_check));
            return fam;
        } catch (const SingularCurve&) {
            continue;  // redraw
        }
    }
    throw SolverFailure("could not draw a nonsingular generic member");
}

std::vector<std::pair<std::pair<int, int>, std::array<double, 2>>> line_nodes(
    const std::vector<std::array<double, 3>>& lines) {
    std::vector<std::pair<std::pair<int, int>, std::array<double, 2>>> nodes;
    const int n = static_cast<int>(lines.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double det = lines[i][0] * lines[j][1] - lines[j][0] * lines[i][1];
            if (std::abs(det) < 1e-12) throw SolverFailure("parallel lines have no affine node");
            double x = (lines[i][1] * lines[j][2] - lines[j][1] * lines[i][2]) / det;
            double y = (lines[j][0] * lines[i][2] - lines[i][0] * lines[j][2]) / det;
            nodes.push_back({{i, j}, {x, y}});
        }
    }
    return nodes;
}

std::vector<TangentReport> run_degeneration(const CurveFamily& family,
                                            const std::vector<double>& s_values,
                                            double cluster_radius, double tol) {
    auto nodes = line_nodes(family.lines);
    double min_sep = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < nodes.size(); ++i)
        for (size_t j = i + 1; j < nodes.size(); ++j)
            min_sep = std::min(min_sep, std::hypot(nodes[i].second[0] - nodes[j].second[0],
                                                   nodes[i].second[1] - nodes[j].second[1]));
    if (cluster_radius <= 0.0) cluster_radius = 0.25 * min_sep;
    if (cluster_radius >= 0.5 * min_sep)
        throw std::invalid_argument("cluster radius must stay below half the node separation");

    const int n = static_cast<int>(family.lines.size());
    const size_t expected = static_cast<size_t>(n) * (n - 1);

    std::vector<TangentReport> reports;
    for (double s : s_values) {
        TangentReport rep;
        rep.s = s;
        rep.tangents = vertical_tangents(family.member(s), tol);
        for (const auto& nd : nodes) rep.clusters[nd.first] = 0;
        for (size_t t = 0; t < rep.tangents.size(); ++t) {
            const auto& tp = rep.tangents[t];
            int hits = 0;
            std::pair<int, int> home{-1, -1};
            for (const auto& nd : nodes) {
                double d = std::sqrt(std::norm(tp.x - nd.second[0]) + std::norm(tp.y - nd.second[1]));
                if (d <= cluster_radius) {
                    ++hits;
                    home = nd.first;
                }
            }
            if (hits > 1)
                throw ClusterAmbiguity("tangent point within cluster radius of two nodes");
            if (hits == 1)
                ++rep.clusters[home];
            else
                rep.unclustered.push_back(static_cast<int>(t));
        }
        rep.two_per_node = rep.tangents.size() == expected && rep.unclustered.empty() &&
                           std::all_of(rep.clusters.begin(), rep.clusters.end(),
                                       [](const auto& kv) { return kv.second == 2; });
        reports.push_back(std::move(rep));
    }
    return reports;
}

}  // namespace alcove
