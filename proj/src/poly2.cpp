#include "alcove/poly2.hpp"

#include <algorithm>
#include <cmath>

namespace alcove {

int BivariatePoly::exact_degree(double eps) const {
    int deg = -1;
    for (int i = 0; i <= bound_; ++i)
        for (int j = 0; i + j <= bound_; ++j)
            if (std::abs(at(i, j)) > eps) deg = std::max(deg, i + j);
    return deg;
}

int BivariatePoly::degree_in_x() const {
    int deg = -1;
    for (int i = 0; i <= bound_; ++i)
        for (int j = 0; i + j <= bound_; ++j)
            if (at(i, j) != 0.0) deg = std::max(deg, i);
    return deg;
}

int BivariatePoly::degree_in_y() const {
    int deg = -1;
    for (int i = 0; i <= bound_; ++i)
        for (int j = 0; i + j <= bound_; ++j)
            if (at(i, j) != 0.0) deg = std::max(deg, j);
    return deg;
}

std::complex<double> BivariatePoly::eval(std::complex<double> x, std::complex<double> y) const {
    // Horner in x, inner Horner in y.
    std::complex<double> acc = 0.0;
    for (int i = bound_; i >= 0; --i) {
        std::complex<double> row = 0.0;
        for (int j = bound_ - i; j >= 0; --j) row = row * y + at(i, j);
        acc = acc * x + row;
    }
    return acc;
}

BivariatePoly BivariatePoly::dx() const {
    BivariatePoly r(std::max(0, bound_ - 1));
    for (int i = 1; i <= bound_; ++i)
        for (int j = 0; i + j <= bound_; ++j) r.at(i - 1, j) += i * at(i, j);
    return r;
}

BivariatePoly BivariatePoly::dy() const {
    BivariatePoly r(std::max(0, bound_ - 1));
    for (int i = 0; i <= bound_; ++i)
        for (int j = 1; i + j <= bound_; ++j) r.at(i, j - 1) += j * at(i, j);
    return r;
}

BivariatePoly BivariatePoly::operator*(const BivariatePoly& o) const {
    BivariatePoly r(bound_ + o.bound_);
    for (int i = 0; i <= bound_; ++i)
        for (int j = 0; i + j <= bound_; ++j) {
            if (at(i, j) == 0.0) continue;
            for (int k = 0; k <= o.bound_; ++k)
                for (int l = 0; k + l <= o.bound_; ++l)
                    r.at(i + k, j + l) += at(i, j) * o.at(k, l);
        }
    return r;
}

BivariatePoly BivariatePoly::operator+(const BivariatePoly& o) const {
    BivariatePoly r(std::max(bound_, o.bound_));
    for (int i = 0; i <= bound_; ++i)
        for (int j = 0; i + j <= bound_; ++j) r.at(i, j) += at(i, j);
    for (int i = 0; i <= o.bound_; ++i)
        for (int j = 0; i + j <= o.bound_; ++j) r.at(i, j) += o.at(i, j);
    return r;
}

BivariatePoly BivariatePoly::scaled(double s) const {
    BivariatePoly r(bound_);
    for (int i = 0; i <= bound_; ++i)
        for (int j = 0; i + j <= bound_; ++j) r.at(i, j) = s * at(i, j);
    return r;
}

double BivariatePoly::max_abs_coeff() const {
    double m = 0.0;
    for (int i = 0; i <= bound_; ++i)
        for (int j = 0; i + j <= bound_; ++j) m = std::max(m, std::abs(at(i, j)));
    return m;
}

std::vector<double> BivariatePoly::coeff_of_y_power(int k) const {
    std::vector<double> out;
    for (int i = 0; i + k <= bound_; ++i) out.push_back(at(i, k));
    while (out.size() > 1 && out.back() == 0.0) out.pop_back();
    return out;
}

std::vector<double> BivariatePoly::coeff_of_x_power(int k) const {
    std::vector<double> out;
    for (int j = 0; k + j <= bound_; ++j) out.push_back(at(k, j));
    while (out.size() > 1 && out.back() == 0.0) out.pop_back();
    return out;
}

}  // namespace alcove
