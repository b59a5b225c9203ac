#pragma once

// Fitting a generalized tropical Puiseux polynomial with N monomials to M
// input/output samples, minimizing the tropical span distance. The squared
// error Delta(p) factors through partitions of the sample index set: each
// part contributes the minimum of a max-plus polynomial in the exponent
// indeterminate, and the partition is searched by greedy agglomerative
// merging with a pairwise merge-cost cache.
//
// The whole search runs in max-plus; max-times ("max-algebra") fitting is a
// log/exp transport around the same path.

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "tropfit/polynomial.hpp"
#include "tropfit/semifield.hpp"

namespace tropfit {

/// Kernel execution policy: `parallel` runs the independent merge-cost
/// evaluations under OpenMP, `serial` is the reference path. Both produce
/// bitwise-identical results.
enum class Exec { serial, parallel };

struct SampleSet {
    Semifield tag = Semifield::max_plus;
    std::vector<double> xs;
    std::vector<double> ys;

    std::size_t size() const { return xs.size(); }
};

/// Checked constructor: equal lengths, M >= 1, values nonzero in the tag's
/// sense (finite for max-plus, strictly positive for max-times), abscissas
/// pairwise distinct beyond 1e-12.
SampleSet make_samples(std::vector<double> xs, std::vector<double> ys, Semifield tag);

struct FitConfig {
    int n_terms = 1;
    Semifield tag = Semifield::max_plus;
    double tie_tolerance = 1e-12;
    double exponent_merge_tol = kExponentMergeTol;
    Exec exec = Exec::parallel;
};

struct Cluster {
    std::vector<int> members;  // ascending 0-based sample indices
    TropPolynomial poly;       // sum of the members' phi polynomials
    MinResult minres;
};

struct ClusterState {
    std::vector<Cluster> clusters;
    // Symmetric merge-cost cache over current cluster indices; cost[u][v] is
    // the minimum of the summed polynomial of clusters u and v. After a
    // merge only the new cluster's row/column is recomputed.
    std::vector<std::vector<double>> pair_costs;
    int step = 0; // merges applied so far
    double tie_tolerance = 1e-12;
    double exponent_merge_tol = kExponentMergeTol;
};

/// Per-sample polynomial in the exponent indeterminate:
/// phi_i(p) = (+)_j y_j^-1 y_i p^(x_j - x_i). Max-plus samples only.
TropPolynomial build_phi(const SampleSet& samples, int i,
                         double merge_tol = kExponentMergeTol);

/// Cost of merging clusters u and v: minimize(poly_sum(Phi_u, Phi_v)).mu.
/// Never below the larger of the two cluster minima.
double merge_cost(const ClusterState& state, std::size_t u, std::size_t v);

/// Run the agglomeration from M singletons down to n_terms clusters. The
/// optional observer sees the state after construction and after each merge
/// (used by sweep).
ClusterState agglomerate(const SampleSet& samples, const FitConfig& config,
                         const std::function<void(const ClusterState&)>& observer = nullptr);

struct FitResult {
    Semifield algebra = Semifield::max_plus;
    int n_terms = 0;
    double delta_star = 0.0; // squared approximation error, carrier value
    double error = 0.0;      // delta_star^(1/2) in the algebra
    std::vector<double> exponents;                       // p*, ascending
    std::vector<double> coefficients;                    // theta*, carrier values
    std::vector<std::vector<int>> partition;             // 1-based sample indices
    std::vector<double> per_cluster_minima;              // delta*_j, carrier values
    std::vector<std::array<std::optional<double>, 2>> intervals; // [lo_j, hi_j]
    std::vector<double> residuals;                       // per-sample span contribution
};

/// Step-4 extraction: cluster minima, representative exponents, the
/// coefficient vector theta*_j = sqrt(Delta*) (x) phi(p*_j)^-1, and the
/// per-sample residuals of the assembled polynomial.
FitResult finalize(const ClusterState& state, const SampleSet& samples);

/// Full pipeline on max-plus samples.
FitResult fit(const SampleSet& samples, const FitConfig& config);

/// Max-algebra pipeline: fit the elementwise-log problem in max-plus, then
/// exponentiate the error and coefficients (exponents pass through).
FitResult fit_maxalgebra(const SampleSet& samples, const FitConfig& config);

/// Evaluate the fitted polynomial at a point of its algebra's carrier.
double predict(const FitResult& result, double x);

struct SweepEntry {
    int n_terms;
    double delta_star;
};

/// Delta* for every cluster count in [n_min, n_max], read off one
/// agglomeration pass (the merge path does not depend on the stopping
/// point). Result is ascending in n_terms and nonincreasing in delta.
std::vector<SweepEntry> sweep(const SampleSet& samples, int n_min, int n_max,
                              Exec exec = Exec::parallel);

} // namespace tropfit
