#include "tdl/annulus_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "tdl/common.hpp"
#include "tdl/errors.hpp"

namespace tdl {

AnnulusPointSet annulus_points(const QuadraticForm& Q, double X, double width) {
    if (!(X > 0.0)) throw Error("annulus_points: X must be positive");
    if (!(width > 0.0)) throw Error("annulus_points: width must be positive");
    const int d = Q.dim();

    std::vector<long long> box(d);
    for (int j = 0; j < d; ++j)
        box[j] = static_cast<long long>(std::ceil(std::sqrt((X + width) / Q.theta()[j])));

    AnnulusPointSet set;
    set.X = X;
    set.width = width;
    std::vector<long long> m(d, 0);
    for (int j = 0; j < d; ++j) m[j] = -box[j];
    // bounding box is anisotropic; walk it with a manual odometer
    while (true) {
        double q = Q(m);
        if (q >= X && q <= X + width) set.points.push_back(m);
        int j = d - 1;
        while (j >= 0 && m[j] == box[j]) {
            m[j] = -box[j];
            --j;
        }
        if (j < 0) break;
        ++m[j];
    }
    return set;
}

namespace {

// Exact integer determinant of the (d x d) edge matrix of a (d+1)-point
// simplex. Direct formulas for d <= 3, Bareiss fraction-free elimination
// beyond that.
__int128 edge_determinant(const std::vector<const std::vector<long long>*>& pts, int d) {
    auto e = [&](int i, int j) -> long long {
        return (*pts[i + 1])[j] - (*pts[0])[j];
    };
    if (d == 1) return e(0, 0);
    if (d == 2)
        return static_cast<__int128>(e(0, 0)) * e(1, 1) -
               static_cast<__int128>(e(0, 1)) * e(1, 0);
    if (d == 3) {
        __int128 m00 = static_cast<__int128>(e(1, 1)) * e(2, 2) -
                       static_cast<__int128>(e(1, 2)) * e(2, 1);
        __int128 m01 = static_cast<__int128>(e(1, 0)) * e(2, 2) -
                       static_cast<__int128>(e(1, 2)) * e(2, 0);
        __int128 m02 = static_cast<__int128>(e(1, 0)) * e(2, 1) -
                       static_cast<__int128>(e(1, 1)) * e(2, 0);
        return e(0, 0) * m00 - e(0, 1) * m01 + e(0, 2) * m02;
    }

    std::vector<std::vector<__int128>> a(d, std::vector<__int128>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a[i][j] = e(i, j);
    int sign = 1;
    __int128 prev = 1;
    for (int k = 0; k + 1 < d; ++k) {
        if (a[k][k] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < d; ++r)
                if (a[r][k] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return 0;
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < d; ++i) {
            for (int j = k + 1; j < d; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[d - 1][d - 1];
}

long long dist2(const std::vector<long long>& a, const std::vector<long long>& b) {
    long long s = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        long long dj = a[j] - b[j];
        s += dj * dj;
    }
    return s;
}

std::size_t subset_cap_for(int d) {
    if (d == 2) return 2000;
    if (d == 3) return 300;
    return 60; // higher d: keep C(n, d+1) sane
}

struct Vll_hash {
    std::size_t operator()(const std::vector<long long>& v) const {
        std::uint64_t h = 1469598103934665603ull;
        for (long long x : v) {
            for (int b = 0; b < 8; ++b) {
                h ^= static_cast<unsigned char>(x >> (8 * b));
                h *= 1099511628211ull;
            }
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace

DiameterResult min_noncoplanar_diameter(const AnnulusPointSet& points, int d) {
    const auto& pts = points.points;
    const std::size_t n = pts.size();
    if (n < static_cast<std::size_t>(d) + 1)
        throw Error("min_noncoplanar_diameter: need at least d+1 points");
    if (n > subset_cap_for(d))
        throw CombinatorialBudgetError(
            "min_noncoplanar_diameter: " + std::to_string(n) +
            " points exceeds the subset-scan cap for d=" + std::to_string(d));

    // sort for a deterministic witness
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });

    long long best = std::numeric_limits<long long>::max();
    std::vector<std::size_t> best_subset;
    std::vector<std::size_t> current;
    current.reserve(d + 1);

    // depth-first subset enumeration, pruning on the running max pair distance
    auto recurse = [&](auto&& self, std::size_t start, long long max_d2) -> void {
        if (current.size() == static_cast<std::size_t>(d) + 1) {
            std::vector<const std::vector<long long>*> sel;
            sel.reserve(d + 1);
            for (std::size_t i : current) sel.push_back(&pts[order[i]]);
            if (edge_determinant(sel, d) != 0 && max_d2 < best) {
                best = max_d2;
                best_subset = current;
            }
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            long long m2 = max_d2;
            bool ok = true;
            for (std::size_t j : current) {
                long long d2 = dist2(pts[order[i]], pts[order[j]]);
                if (d2 >= best) {
                    ok = false;
                    break;
                }
                m2 = std::max(m2, d2);
            }
            if (!ok) continue;
            current.push_back(i);
            self(self, i + 1, m2);
            current.pop_back();
        }
    };
    recurse(recurse, 0, 0);

    if (best_subset.empty())
        throw NoNonDegenerateSimplex(
            "min_noncoplanar_diameter: every (d+1)-subset is flat");

    DiameterResult res;
    res.diameter = std::sqrt(static_cast<double>(best));
    for (std::size_t i : best_subset) res.witness.vertices.push_back(pts[order[i]]);
    std::vector<const std::vector<long long>*> sel;
    for (const auto& v : res.witness.vertices) sel.push_back(&v);
    res.witness.determinant = static_cast<long long>(edge_determinant(sel, d));
    res.witness.diameter = res.diameter;
    return res;
}

int max_collinear(const AnnulusPointSet& points) {
    const auto& pts = points.points;
    const std::size_t n = pts.size();
    if (n < 2) throw Error("max_collinear: need at least 2 points");
    const std::size_t d = pts[0].size();

    // Count unordered point pairs per affine line. A line is keyed by its
    // primitive direction plus a canonical anchor point on it; a line holding
    // k points shows up in exactly k(k-1)/2 pairs.
    std::unordered_map<std::vector<long long>, std::uint64_t, Vll_hash> line_pairs;
    std::vector<long long> key(2 * d);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<long long> dir(d);
            long long g = 0;
            for (std::size_t c = 0; c < d; ++c) {
                dir[c] = pts[j][c] - pts[i][c];
                g = std::gcd(g, std::abs(dir[c]));
            }
            std::size_t first = 0;
            while (dir[first] == 0) ++first;
            for (std::size_t c = 0; c < d; ++c) dir[c] /= g;
            if (dir[first] < 0)
                for (std::size_t c = 0; c < d; ++c) dir[c] = -dir[c];
            long long k = floor_div(pts[i][first], dir[first]);
            for (std::size_t c = 0; c < d; ++c) {
                key[c] = dir[c];
                key[d + c] = pts[i][c] - k * dir[c];
            }
            ++line_pairs[key];
        }
    }

    std::uint64_t best_pairs = 0;
    for (const auto& [k, c] : line_pairs) best_pairs = std::max(best_pairs, c);
    // invert c = m(m-1)/2
    std::uint64_t m = static_cast<std::uint64_t>(
        (1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(best_pairs))) / 2.0);
    while (m * (m - 1) / 2 > best_pairs) --m;
    while ((m + 1) * m / 2 <= best_pairs) ++m;
    return static_cast<int>(m);
}

GeometrySweepResult geometric_bound_sweep(const QuadraticForm& Q,
                                          std::span<const double> X_grid,
                                          double width) {
    const int d = Q.dim();
    const double exponent = 1.0 / (2.0 * (d + 1));

    GeometrySweepResult res;
    res.min_ratio = std::numeric_limits<double>::infinity();
    for (double X : X_grid) {
        AnnulusPointSet set = annulus_points(Q, X, width);
        if (set.points.size() < static_cast<std::size_t>(d) + 1) {
            res.skipped.emplace_back(X, "fewer than d+1 annulus points");
            continue;
        }
        try {
            DiameterResult dr = min_noncoplanar_diameter(set, d);
            GeometrySample s;
            s.X = X;
            s.n_points = set.points.size();
            s.diameter = dr.diameter;
            s.ratio = dr.diameter / std::pow(X, exponent);
            s.determinant = dr.witness.determinant;
            s.collinear = max_collinear(set);
            s.diameter_below_sqrt_X = dr.diameter < std::sqrt(X);
            res.samples.push_back(s);
            res.min_ratio = std::min(res.min_ratio, s.ratio);
        } catch (const NoNonDegenerateSimplex&) {
            res.skipped.emplace_back(X, "all subsets flat");
        } catch (const CombinatorialBudgetError&) {
            res.skipped.emplace_back(X, "subset scan over budget");
        }
    }
    if (res.samples.empty())
        throw EmptySweepError("geometric_bound_sweep: no usable X in the grid");

    if (res.samples.size() >= 2) {
        std::vector<std::pair<double, double>> xy;
        for (const auto& s : res.samples) xy.emplace_back(s.X, s.diameter);
        auto hull = lower_envelope_loglog(xy);
        if (hull.size() >= 2) res.envelope_fit = fit_power_law(hull);
    }
    return res;
}

} // namespace tdl
