#pragma once

// Small shared utilities: multi-index iteration over integer cubes,
// accurate summation, FFT-friendly sizes, a stable content hash, and a
// portable seeded Gaussian sampler.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace tdl {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// ---------------------------------------------------------------------------
// Multi-index helpers for cubes [-N,N]^d stored row-major (last index fastest).
// ---------------------------------------------------------------------------

inline std::size_t cube_size(int d, long long N) {
    std::size_t s = 1;
    for (int j = 0; j < d; ++j) s *= static_cast<std::size_t>(2 * N + 1);
    return s;
}

// Advances idx through [lo, hi]^d lexicographically; returns false after the
// last index. Start with idx = lo everywhere and loop do { ... } while (next).
inline bool next_index(std::vector<long long>& idx, long long lo, long long hi) {
    for (int j = static_cast<int>(idx.size()) - 1; j >= 0; --j) {
        if (idx[j] < hi) {
            ++idx[j];
            for (std::size_t k = j + 1; k < idx.size(); ++k) idx[k] = lo;
            return true;
        }
    }
    return false;
}

inline std::size_t flat_index(std::span<const long long> n, long long N) {
    std::size_t f = 0;
    const std::size_t stride = static_cast<std::size_t>(2 * N + 1);
    for (std::size_t j = 0; j < n.size(); ++j)
        f = f * stride + static_cast<std::size_t>(n[j] + N);
    return f;
}

// ---------------------------------------------------------------------------
// Summation: recursive pairwise reduction, used for every norm accumulation so
// results do not depend on chunking order.
// ---------------------------------------------------------------------------

namespace detail {
template <typename T, typename F>
T pairwise_sum_impl(std::size_t lo, std::size_t hi, const F& term) {
    if (hi - lo <= 16) {
        T s{};
        for (std::size_t i = lo; i < hi; ++i) s += term(i);
        return s;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum_impl<T>(lo, mid, term) + pairwise_sum_impl<T>(mid, hi, term);
}
} // namespace detail

template <typename F>
double pairwise_sum(std::size_t count, const F& term) {
    if (count == 0) return 0.0;
    return detail::pairwise_sum_impl<double>(0, count, term);
}

inline double pairwise_sum(std::span<const double> v) {
    return pairwise_sum(v.size(), [&](std::size_t i) { return v[i]; });
}

// Compensated (Kahan) accumulator for long sequential loops.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

// ---------------------------------------------------------------------------
// Misc numeric helpers
// ---------------------------------------------------------------------------

// Smallest 5-smooth integer >= n (sizes FFTW handles at O(n log n)).
inline int good_fft_size(int n) {
    if (n <= 1) return 1;
    for (int s = n;; ++s) {
        int r = s;
        for (int p : {2, 3, 5})
            while (r % p == 0) r /= p;
        if (r == 1) return s;
    }
}

inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// ---------------------------------------------------------------------------
// FNV-1a 64-bit, used for manifest content hashes.
// ---------------------------------------------------------------------------

inline std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// ---------------------------------------------------------------------------
// Seeded Gaussian sampler. Box-Muller over mt19937_64 output so streams are
// identical across standard libraries.
// ---------------------------------------------------------------------------

class GaussianRng {
public:
    explicit GaussianRng(std::uint64_t seed) : eng_(seed) {}

    double uniform() { // in (0,1]
        return (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53;
    }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u = uniform();
        double v = uniform();
        double r = std::sqrt(-2.0 * std::log(u));
        spare_ = r * std::sin(kTwoPi * v);
        have_spare_ = true;
        return r * std::cos(kTwoPi * v);
    }

    std::complex<double> complex_gaussian() {
        double u = uniform();
        double v = uniform();
        double r = std::sqrt(-std::log(u)); // each component variance 1/2
        return {r * std::cos(kTwoPi * v), r * std::sin(kTwoPi * v)};
    }

    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace tdl
