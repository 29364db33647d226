#include "tdl/lattice_count.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tdl/common.hpp"
#include "tdl/errors.hpp"

namespace tdl {

AnnulusCount count_annulus(const QuadraticForm& Q, long long N, double ell,
                           double width) {
    if (N < 1) throw Error("count_annulus: N must be >= 1");
    if (!(width > 0.0)) throw Error("count_annulus: width must be positive");
    const int d = Q.dim();
    std::uint64_t count = 0;
    std::vector<long long> m(d, -N);
    do {
        double q = Q(m);
        if (std::abs(q - ell) <= width) ++count;
    } while (next_index(m, -N, N));
    return AnnulusCount{N, ell, width, count};
}

namespace {

struct WeightedValue {
    double q;
    std::uint32_t mult;
};

// Sliding maximal window of total width 2w over sorted weighted values.
SupAnnulus sliding_window_sup(std::vector<WeightedValue>& vals, double width) {
    std::sort(vals.begin(), vals.end(),
              [](const WeightedValue& a, const WeightedValue& b) { return a.q < b.q; });
    const std::size_t n = vals.size();
    SupAnnulus best{0.0, 0};
    std::uint64_t window = 0;
    std::size_t j = 0;
    for (std::size_t i = 0; i < n; ++i) {
        // ensure window covers [q_i, q_i + 2w], closed on both ends
        while (j < n && vals[j].q <= vals[i].q + 2.0 * width) {
            window += vals[j].mult;
            ++j;
        }
        if (window > best.count) {
            best.count = window;
            best.ell_star = vals[i].q + width;
        }
        window -= vals[i].mult;
    }
    return best;
}

} // namespace

SupAnnulus sup_annulus_count(const QuadraticForm& Q, long long N, double width,
                             EnumerationMode mode, std::size_t memory_budget_values) {
    if (N < 1) throw Error("sup_annulus_count: N must be >= 1");
    if (!(width > 0.0)) throw Error("sup_annulus_count: width must be positive");
    const int d = Q.dim();

    // stored value count, with overflow guard
    double stored = 1.0;
    const double per_dim =
        (mode == EnumerationMode::FullCube) ? 2.0 * static_cast<double>(N) + 1.0
                                            : static_cast<double>(N) + 1.0;
    for (int j = 0; j < d; ++j) stored *= per_dim;
    if (stored > static_cast<double>(memory_budget_values))
        throw MemoryBudgetError("sup_annulus_count: enumeration of " +
                                std::to_string(stored) + " values exceeds budget of " +
                                std::to_string(memory_budget_values));

    std::vector<WeightedValue> vals;
    vals.reserve(static_cast<std::size_t>(stored));

    if (mode == EnumerationMode::FullCube) {
        std::vector<long long> m(d, -N);
        do {
            vals.push_back({Q(m), 1});
        } while (next_index(m, -N, N));
    } else {
        // Q is even in every coordinate: a point with k nonzero coordinates
        // represents its 2^k sign-flip orbit.
        std::vector<long long> m(d, 0);
        do {
            std::uint32_t mult = 1;
            for (long long c : m)
                if (c != 0) mult <<= 1;
            vals.push_back({Q(m), mult});
        } while (next_index(m, 0, N));
    }

    return sliding_window_sup(vals, width);
}

std::vector<std::uint64_t> sums_of_squares(int dprime, long long M) {
    if (dprime < 1) throw Error("sums_of_squares: dprime must be >= 1");
    if (M < 0) throw Error("sums_of_squares: M must be >= 0");
    const std::size_t len = static_cast<std::size_t>(M) + 1;

    std::vector<std::uint64_t> r1(len, 0);
    r1[0] = 1;
    for (long long k = 1; k * k <= M; ++k) r1[static_cast<std::size_t>(k * k)] = 2;

    std::vector<std::uint64_t> r = r1;
    for (int j = 2; j <= dprime; ++j) {
        std::vector<std::uint64_t> next(len, 0);
        for (std::size_t a = 0; a < len; ++a) {
            if (r[a] == 0) continue;
            next[a] += r[a]; // k = 0
            for (long long k = 1; k * k <= static_cast<long long>(M - a); ++k)
                next[a + static_cast<std::size_t>(k * k)] += 2 * r[a];
        }
        r = std::move(next);
    }
    return r;
}

std::complex<double> exponential_sum(const QuadraticForm& Q, long long N, double t) {
    if (N < 1) throw Error("exponential_sum: N must be >= 1");
    std::complex<double> prod = 1.0;
    for (double theta : Q.theta()) {
        std::complex<double> s = 1.0; // k = 0
        for (long long k = 1; k <= N; ++k) {
            double phase = t * theta * static_cast<double>(k * k);
            s += 2.0 * std::complex<double>(std::cos(phase), std::sin(phase));
        }
        prod *= s;
    }
    return prod;
}

} // namespace tdl
