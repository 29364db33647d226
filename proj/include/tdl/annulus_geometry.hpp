#pragma once

// Configurations of lattice points inside a thin annulus of the form Q:
// exhaustive search for the smallest non-degenerate (d+1)-point simplex by
// diameter, the largest collinear subset, and an X-sweep that fits the
// diameter's growth exponent.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tdl/power_law.hpp"
#include "tdl/torus.hpp"

namespace tdl {

struct AnnulusPointSet {
    double X = 0.0;
    double width = 1.0;
    std::vector<std::vector<long long>> points; // distinct, closed under sign flips
};

// All lattice m with X <= Q(m) <= X + width, found by scanning the bounding
// box |m_j| <= ceil(sqrt((X+width)/theta_j)). Points come out in
// lexicographic order.
AnnulusPointSet annulus_points(const QuadraticForm& Q, double X, double width = 1.0);

struct SimplexDiagnostic {
    std::vector<std::vector<long long>> vertices; // d+1 points
    long long determinant = 0;                    // det of edge matrix, exact
    double diameter = 0.0;                        // max pairwise Euclidean distance
};

struct DiameterResult {
    double diameter = 0.0;
    SimplexDiagnostic witness;
};

// Minimum over all (d+1)-subsets with nonzero edge determinant of the
// subset's largest pairwise distance. Subset scan is O(n^{d+1}); n is capped
// (2000 for d=2, 300 for d=3) and CombinatorialBudgetError is thrown beyond
// the cap. Throws NoNonDegenerateSimplex when every subset is flat.
DiameterResult min_noncoplanar_diameter(const AnnulusPointSet& points, int d);

// Size of the largest subset of points lying on one affine line.
int max_collinear(const AnnulusPointSet& points);

struct GeometrySample {
    double X = 0.0;
    std::size_t n_points = 0;
    double diameter = 0.0;
    double ratio = 0.0; // diameter / X^{1/(2(d+1))}
    long long determinant = 0;
    int collinear = 0;
    bool diameter_below_sqrt_X = true; // side condition D < X^{1/2}
};

struct GeometrySweepResult {
    std::vector<GeometrySample> samples;
    std::vector<std::pair<double, std::string>> skipped; // (X, reason)
    double min_ratio = 0.0;
    std::optional<PowerLawFit> envelope_fit; // over lower log-log hull of (X, D)
};

// Runs min_noncoplanar_diameter over the X grid; unusable X values (too few
// points, all subsets flat, budget) are skipped and reported. Throws
// EmptySweepError when no X is usable.
GeometrySweepResult geometric_bound_sweep(const QuadraticForm& Q,
                                          std::span<const double> X_grid,
                                          double width = 1.0);

} // namespace tdl
