#pragma once

// Independent brute-force references for the fitter: exhaustive search over
// all partitions of the sample index set (restricted-growth-string
// enumeration, capped part count), a dense grid minimizer for polynomials,
// and a from-first-principles residual recomputation through the vector
// equation X(p) theta = y.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tropfit/fitter.hpp"
#include "tropfit/polynomial.hpp"

namespace tropfit {

// Stirling-number growth: beyond this many samples the enumeration is
// refused rather than attempted.
inline constexpr int kOracleMaxSamples = 12;

struct OracleSizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleResult {
    Semifield algebra = Semifield::max_plus;
    double delta_exact = 0.0;                // carrier value
    std::vector<std::vector<int>> best_partition; // 1-based sample indices
    std::uint64_t evaluations = 0;           // partitions examined
};

/// Exact minimum of the partition objective over every partition of
/// {1..M} into at most n_terms nonempty parts. Throws OracleSizeError when
/// M > kOracleMaxSamples.
OracleResult exact_fit(const SampleSet& samples, int n_terms, Exec exec = Exec::parallel);

/// Dense scan of eval over {lo, lo+step, ...} up to hi; returns the
/// minimizing abscissa and its value (first hit on ties).
std::pair<double, double> grid_minimize(const TropPolynomial& p, double lo, double hi,
                                        double step, Exec exec = Exec::parallel);

/// Rebuild X(p*) and theta* from a fit result and recompute the distance
/// d(X(p*) theta*, y) through the linear-algebra route. Must agree with
/// result.error to 1e-9.
double residual_check(const FitResult& result, const SampleSet& samples);

} // namespace tropfit
