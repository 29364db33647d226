#pragma once

// Rectangular torus geometry and the quadratic symbol of its Laplacian.
// The torus R^d / prod_j alpha_j Z carries Fourier modes e^{2*pi*i n.(x/alpha)}
// with -Delta eigenvalues Q(n) = sum_j (2*pi/alpha_j)^2 n_j^2; everything in
// this project is built on that pair.

#include <span>
#include <vector>

#include "tdl/errors.hpp"

namespace tdl {

class TorusGeometry {
public:
    // Side lengths; each must lie in [1/2, 2].
    explicit TorusGeometry(std::vector<double> alpha);

    int dim() const { return static_cast<int>(alpha_.size()); }
    const std::vector<double>& alpha() const { return alpha_; }
    double volume() const;

    bool operator==(const TorusGeometry&) const = default;

private:
    std::vector<double> alpha_;
};

class QuadraticForm {
public:
    // Coefficients of Q(m) = sum_j theta_j m_j^2; all positive.
    explicit QuadraticForm(std::vector<double> theta);

    int dim() const { return static_cast<int>(theta_.size()); }
    const std::vector<double>& theta() const { return theta_; }
    double theta_sum() const;
    double theta_min() const;
    double theta_max() const;

    double operator()(std::span<const long long> m) const;

    bool operator==(const QuadraticForm&) const = default;

private:
    std::vector<double> theta_;
};

// theta_j = (2*pi/alpha_j)^2
QuadraticForm form_from_torus(const TorusGeometry& geometry);

double eval_form(const QuadraticForm& Q, std::span<const long long> m);

} // namespace tdl
