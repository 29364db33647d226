#include "tdl/torus.hpp"

#include <algorithm>
#include <cmath>

#include "tdl/common.hpp"

namespace tdl {

TorusGeometry::TorusGeometry(std::vector<double> alpha) : alpha_(std::move(alpha)) {
    if (alpha_.empty()) throw Error("TorusGeometry: dimension must be >= 1");
    for (double a : alpha_) {
        if (!(a >= 0.5 && a <= 2.0))
            throw Error("TorusGeometry: side lengths must lie in [1/2, 2]");
    }
}

double TorusGeometry::volume() const {
    double v = 1.0;
    for (double a : alpha_) v *= a;
    return v;
}

QuadraticForm::QuadraticForm(std::vector<double> theta) : theta_(std::move(theta)) {
    if (theta_.empty()) throw Error("QuadraticForm: dimension must be >= 1");
    for (double t : theta_) {
        if (!(t > 0.0)) throw Error("QuadraticForm: coefficients must be positive");
    }
}

double QuadraticForm::theta_sum() const {
    double s = 0.0;
    for (double t : theta_) s += t;
    return s;
}

double QuadraticForm::theta_min() const {
    return *std::min_element(theta_.begin(), theta_.end());
}

double QuadraticForm::theta_max() const {
    return *std::max_element(theta_.begin(), theta_.end());
}

double QuadraticForm::operator()(std::span<const long long> m) const {
    if (m.size() != theta_.size())
        throw DimensionMismatch("QuadraticForm: point dimension mismatch");
    double q = 0.0;
    for (std::size_t j = 0; j < theta_.size(); ++j)
        q += theta_[j] * static_cast<double>(m[j] * m[j]);
    return q;
}

QuadraticForm form_from_torus(const TorusGeometry& geometry) {
    std::vector<double> theta(geometry.dim());
    for (int j = 0; j < geometry.dim(); ++j) {
        double w = kTwoPi / geometry.alpha()[j];
        theta[j] = w * w;
    }
    return QuadraticForm(std::move(theta));
}

double eval_form(const QuadraticForm& Q, std::span<const long long> m) { return Q(m); }

} // namespace tdl
