#pragma once

// Exact lattice-point counts in thin level sets of a positive diagonal
// quadratic form, the sup of those counts over all window positions, the
// sums-of-squares table r_k(m), and the quadratic Weyl sum over a cube.

#include <complex>
#include <cstdint>
#include <vector>

#include "tdl/torus.hpp"

namespace tdl {

struct AnnulusCount {
    long long N = 0;
    double ell = 0.0;
    double width = 1.0;
    std::uint64_t count = 0;
};

// Number of m in [-N,N]^d with |Q(m) - ell| <= width.
AnnulusCount count_annulus(const QuadraticForm& Q, long long N, double ell,
                           double width = 1.0);

enum class EnumerationMode {
    FullCube,        // enumerate all (2N+1)^d points
    SymmetryReduced, // enumerate [0,N]^d with sign-flip multiplicities
};

struct SupAnnulus {
    double ell_star = 0.0;
    std::uint64_t count = 0;
};

// Exact sup over all real ell of count_annulus(Q, N, ell, width).
// Sorts every Q value in the cube; the sup window's left edge can be taken at
// an attained value, so a sliding pass over the sorted list is exact.
// Throws MemoryBudgetError when the enumeration exceeds memory_budget_values.
SupAnnulus sup_annulus_count(const QuadraticForm& Q, long long N, double width = 1.0,
                             EnumerationMode mode = EnumerationMode::FullCube,
                             std::size_t memory_budget_values = std::size_t{1} << 27);

// r_dprime(m) for 0 <= m <= M: representations of m as an ordered sum of
// dprime signed integer squares. Iterated convolution of the 1-d table.
std::vector<std::uint64_t> sums_of_squares(int dprime, long long M);

// sum over m in [-N,N]^d of e^{i t Q(m)}; evaluated as the product of the d
// one-dimensional sums since Q is diagonal.
std::complex<double> exponential_sum(const QuadraticForm& Q, long long N, double t);

} // namespace tdl
