#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace alcove {

// Dense bivariate polynomial over the reals, coefficient c(i,j) for x^i y^j
// with i + j <= degree_bound. Evaluation is complex.
class BivariatePoly {
public:
    explicit BivariatePoly(int degree_bound)
        : bound_(degree_bound), c_(static_cast<size_t>(degree_bound + 1) * (degree_bound + 1), 0.0) {
        if (degree_bound < 0) throw std::invalid_argument("negative degree bound");
    }

    static BivariatePoly constant(double v) {
        BivariatePoly p(0);
        p.at(0, 0) = v;
        return p;
    }

    int degree_bound() const { return bound_; }

    double& at(int i, int j) { return c_[index(i, j)]; }
    double at(int i, int j) const { return c_[index(i, j)]; }

    /// Highest i+j with a nonzero coefficient; -1 for the zero polynomial.
    int exact_degree(double eps = 0.0) const;

    int degree_in_x() const;
    int degree_in_y() const;

    std::complex<double> eval(std::complex<double> x, std::complex<double> y) const;

    BivariatePoly dx() const;
    BivariatePoly dy() const;

    BivariatePoly operator*(const BivariatePoly& o) const;
    BivariatePoly operator+(const BivariatePoly& o) const;
    BivariatePoly scaled(double s) const;

    double max_abs_coeff() const;

    /// Coefficient of y^k as a univariate polynomial in x (dense, ascending).
    std::vector<double> coeff_of_y_power(int k) const;
    /// Coefficient of x^k as a univariate polynomial in y (dense, ascending).
    std::vector<double> coeff_of_x_power(int k) const;

private:
    size_t index(int i, int j) const {
        if (i < 0 || j < 0 || i + j > bound_) throw std::out_of_range("monomial out of range");
        return static_cast<size_t>(i) * (bound_ + 1) + j;
    }

    int bound_;
    std::vector<double> c_;
};

}  // namespace alcove
