#pragma once

#include <complex>
#include <vector>

namespace alcove {

/// Roots of a dense univariate polynomial (ascending coefficients) via the
/// eigenvalues of the companion matrix. Trailing near-zero leading
/// coefficients are trimmed against rel_eps times the largest magnitude.
std::vector<std::complex<double>> univariate_roots(std::vector<std::complex<double>> coeffs,
                                                   double rel_eps = 1e-12);

}  // namespace alcove
