#include "tdl/power_law.hpp"

#include <algorithm>
#include <cmath>

#include "tdl/errors.hpp"

namespace tdl {

PowerLawFit fit_power_law(std::span<const std::pair<double, double>> samples) {
    if (samples.size() < 2)
        throw InsufficientSamplesError("fit_power_law: need at least 2 samples");
    for (const auto& [x, y] : samples) {
        if (!(x > 0.0) || !(y > 0.0))
            throw NonPositiveSampleError("fit_power_law: samples must be positive");
    }

    const std::size_t n = samples.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : samples) {
        double lx = std::log(x), ly = std::log(y);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    double denom = static_cast<double>(n) * sxx - sx * sx;
    if (denom == 0.0)
        throw NonPositiveSampleError("fit_power_law: degenerate abscissae");

    PowerLawFit fit;
    fit.samples.assign(samples.begin(), samples.end());
    fit.slope = (static_cast<double>(n) * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / static_cast<double>(n);

    double ssr = 0.0;
    for (const auto& [x, y] : samples) {
        double r = std::log(y) - (fit.intercept + fit.slope * std::log(x));
        ssr += r * r;
    }
    fit.residual = std::sqrt(ssr / static_cast<double>(n));
    return fit;
}

std::vector<std::pair<double, double>>
lower_envelope_loglog(std::span<const std::pair<double, double>> samples) {
    std::vector<std::pair<double, double>> pts(samples.begin(), samples.end());
    std::sort(pts.begin(), pts.end());
    // collapse duplicate abscissae to the lowest ordinate
    std::vector<std::pair<double, double>> uniq;
    for (const auto& p : pts) {
        if (!uniq.empty() && uniq.back().first == p.first)
            uniq.back().second = std::min(uniq.back().second, p.second);
        else
            uniq.push_back(p);
    }
    if (uniq.size() <= 2) return uniq;

    auto cross = [](const std::pair<double, double>& a, const std::pair<double, double>& b,
                    const std::pair<double, double>& c) {
        double ax = std::log(a.first), ay = std::log(a.second);
        double bx = std::log(b.first), by = std::log(b.second);
        double cx = std::log(c.first), cy = std::log(c.second);
        return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
    };

    std::vector<std::pair<double, double>> hull;
    for (const auto& p : uniq) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0.0)
            hull.pop_back();
        hull.push_back(p);
    }
    return hull;
}

} // namespace tdl
