#include "alcove/univariate.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <stdexcept>

namespace alcove {

std::vector<std::complex<double>> univariate_roots(std::vector<std::complex<double>> coeffs,
                                                   double rel_eps) {
    double maxmag = 0.0;
    for (const auto& c : coeffs) maxmag = std::max(maxmag, std::abs(c));
    if (maxmag == 0.0) throw std::invalid_argument("zero polynomial has no well-defined roots");
    while (coeffs.size() > 1 && std::abs(coeffs.back()) <= rel_eps * maxmag) coeffs.pop_back();

    const int d = static_cast<int>(coeffs.size()) - 1;
    if (d == 0) return {};

    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) comp(i, d - 1) = -coeffs[i] / coeffs[d];

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigenvalue solver failed");
    std::vector<std::complex<double>> roots(es.eigenvalues().data(),
                                            es.eigenvalues().data() + d);
    return roots;
}

}  // namespace alcove
