#pragma once

// Log-log least squares: every asymptotic claim in this project is judged by
// the fitted exponent of (parameter, value) samples.

#include <span>
#include <utility>
#include <vector>

namespace tdl {

struct PowerLawFit {
    std::vector<std::pair<double, double>> samples;
    double slope = 0.0;
    double intercept = 0.0; // log-space intercept
    double residual = 0.0;  // RMS residual of log y about the fit
};

// OLS of log y on log x. Requires >= 2 samples, all coordinates positive.
PowerLawFit fit_power_law(std::span<const std::pair<double, double>> samples);

// Vertices of the lower convex hull in (log x, log y), sorted by x; the lower
// envelope of a positive sample cloud for envelope-slope fits.
std::vector<std::pair<double, double>>
lower_envelope_loglog(std::span<const std::pair<double, double>> samples);

} // namespace tdl
