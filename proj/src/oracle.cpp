#include "tropfit/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "tropfit/linalg.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tropfit {

namespace {

// Minimum of the summed phi polynomial of every nonempty subset, indexed by
// member bitmask. Subsets are independent, so the table fills in parallel.
std::vector<double> subset_minima(const SampleSet& samples, Exec exec) {
    const int m = static_cast<int>(samples.size());
    std::vector<TropPolynomial> phis;
    phis.reserve(m);
    for (int i = 0; i < m; ++i) phis.push_back(build_phi(samples, i));

    const std::uint32_t total = 1u << m;
    std::vector<double> minima(total, 0.0);
    const auto compute = [&](std::uint32_t mask) {
        std::vector<Monomial> terms;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i))
                terms.insert(terms.end(), phis[i].monomials.begin(), phis[i].monomials.end());
        minima[mask] = minimize(normalize(std::move(terms), Semifield::max_plus)).mu;
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 64)
        for (long long mask = 1; mask < static_cast<long long>(total); ++mask)
            compute(static_cast<std::uint32_t>(mask));
    } else {
        for (std::uint32_t mask = 1; mask < total; ++mask) compute(mask);
    }
    return minima;
}

struct Candidate {
    double delta = std::numeric_limits<double>::infinity();
    std::vector<int> labels; // restricted growth string

    // Total order: smaller delta first, exact ties resolved by the
    // lexicographically smaller string, so reductions are order-independent.
    bool better_than(const Candidate& other) const {
        if (delta != other.delta) return delta < other.delta;
        if (other.labels.empty()) return !labels.empty();
        return labels < other.labels;
    }
};

// All restricted growth strings of length m with labels < n_parts, i.e. all
// partitions into at most n_parts nonempty parts, visited in lexicographic
// order. Returns false when the enumeration is exhausted.
bool next_rgs(std::vector<int>& a, int n_parts) {
    const int m = static_cast<int>(a.size());
    for (int i = m - 1; i >= 1; --i) {
        int prefix_max = 0;
        for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, a[j]);
        if (a[i] < std::min(prefix_max + 1, n_parts - 1)) {
            ++a[i];
            std::fill(a.begin() + i + 1, a.end(), 0);
            return true;
        }
    }
    return false;
}

double partition_delta(const std::vector<int>& labels, const std::vector<double>& minima) {
    std::array<std::uint32_t, kOracleMaxSamples> masks{};
    int n_parts = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        masks[labels[i]] |= 1u << i;
        n_parts = std::max(n_parts, labels[i] + 1);
    }
    double delta = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < n_parts; ++j)
        delta = std::max(delta, minima[masks[j]]);
    return delta;
}

OracleResult exact_fit_maxplus(const SampleSet& samples, int n_terms, Exec exec) {
    const int m = static_cast<int>(samples.size());
    const std::vector<double> minima = subset_minima(samples, exec);

    Candidate best;
    std::uint64_t evaluations = 0;

    // Enumerate in fixed-size chunks: generation stays sequential and cheap,
    // evaluation of a chunk is data-parallel, and the running best is merged
    // with the deterministic candidate order.
    constexpr std::size_t kChunk = 1 << 15;
    std::vector<std::vector<int>> chunk;
    chunk.reserve(kChunk);
    std::vector<int> rgs(m, 0);
    bool more = true;
    while (more) {
        chunk.clear();
        do {
            chunk.push_back(rgs);
            more = next_rgs(rgs, n_terms);
        } while (more && chunk.size() < kChunk);
        evaluations += chunk.size();

        if (exec == Exec::parallel) {
#pragma omp parallel
            {
                Candidate local;
#pragma omp for schedule(static)
                for (long long t = 0; t < static_cast<long long>(chunk.size()); ++t) {
                    const double d = partition_delta(chunk[t], minima);
                    if (d < local.delta ||
                        (d == local.delta && (local.labels.empty() || chunk[t] < local.labels))) {
                        local.delta = d;
                        local.labels = chunk[t];
                    }
                }
#pragma omp critical
                if (local.better_than(best)) best = std::move(local);
            }
        } else {
            for (const std::vector<int>& labels : chunk) {
                const double d = partition_delta(labels, minima);
                Candidate cand{d, labels};
                if (cand.better_than(best)) best = std::move(cand);
            }
        }
    }

    OracleResult result;
    result.algebra = Semifield::max_plus;
    result.delta_exact = best.delta;
    result.evaluations = evaluations;
    int n_parts = 0;
    for (int lbl : best.labels) n_parts = std::max(n_parts, lbl + 1);
    result.best_partition.assign(n_parts, {});
    for (int i = 0; i < m; ++i)
        result.best_partition[best.labels[i]].push_back(i + 1);
    return result;
}

} // namespace

OracleResult exact_fit(const SampleSet& samples, int n_terms, Exec exec) {
    if (static_cast<int>(samples.size()) > kOracleMaxSamples)
        throw OracleSizeError("exact_fit: more than " + std::to_string(kOracleMaxSamples) +
                              " samples; partition enumeration refused");
    if (n_terms < 1 || static_cast<std::size_t>(n_terms) > samples.size())
        throw std::invalid_argument("exact_fit: n_terms out of range");

    if (samples.tag == Semifield::max_times) {
        SampleSet logged;
        logged.tag = Semifield::max_plus;
        for (double v : samples.xs) logged.xs.push_back(std::log(v));
        for (double v : samples.ys) logged.ys.push_back(std::log(v));
        OracleResult r = exact_fit_maxplus(logged, n_terms, exec);
        r.algebra = Semifield::max_times;
        r.delta_exact = std::exp(r.delta_exact);
        return r;
    }
    return exact_fit_maxplus(samples, n_terms, exec);
}

namespace {

inline double grid_eval(const TropPolynomial& p, double x) {
    if (p.tag == Semifield::max_plus) {
        double acc = -std::numeric_limits<double>::infinity();
        for (const Monomial& m : p.monomials) acc = std::max(acc, m.coeff + m.exp * x);
        return acc;
    }
    double acc = 0.0;
    for (const Monomial& m : p.monomials) acc = std::max(acc, m.coeff * std::pow(x, m.exp));
    return acc;
}

} // namespace

std::pair<double, double> grid_minimize(const TropPolynomial& p, double lo, double hi,
                                        double step, Exec exec) {
    if (!(lo < hi) || !(step > 0.0))
        throw std::invalid_argument("grid_minimize: need lo < hi and step > 0");
    const std::int64_t count = static_cast<std::int64_t>(std::floor((hi - lo) / step)) + 1;

    double best_val = std::numeric_limits<double>::infinity();
    std::int64_t best_k = 0;
    if (exec == Exec::parallel) {
#pragma omp parallel
        {
            double local_val = std::numeric_limits<double>::infinity();
            std::int64_t local_k = 0;
            // schedule(static) hands each thread one ascending block, so a
            // strict < keeps the smallest k per thread; ties across threads
            // are resolved in the merge below.
#pragma omp for schedule(static)
            for (std::int64_t k = 0; k < count; ++k) {
                const double v = grid_eval(p, lo + static_cast<double>(k) * step);
                if (v < local_val) {
                    local_val = v;
                    local_k = k;
                }
            }
#pragma omp critical
            if (local_val < best_val || (local_val == best_val && local_k < best_k)) {
                best_val = local_val;
                best_k = local_k;
            }
        }
    } else {
        for (std::int64_t k = 0; k < count; ++k) {
            const double v = grid_eval(p, lo + static_cast<double>(k) * step);
            if (v < best_val) {
                best_val = v;
                best_k = k;
            }
        }
    }
    return {lo + static_cast<double>(best_k) * step, best_val};
}

double residual_check(const FitResult& result, const SampleSet& samples) {
    if (samples.tag != result.algebra)
        throw std::invalid_argument("residual_check: algebra mismatch");
    const std::size_t m = samples.size();
    const std::size_t n = result.exponents.size();

    TropMatrix x_of_p{samples.tag, m, n, std::vector<double>(m * n)};
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double xi = samples.xs[i];
            const double pj = result.exponents[j];
            x_of_p.at(i, j) =
                samples.tag == Semifield::max_plus ? pj * xi : std::pow(xi, pj);
        }
    }
    const TropVector theta{samples.tag, result.coefficients};
    const TropVector y{samples.tag, samples.ys};
    const TropDistance d = distance(matvec(x_of_p, theta), y);
    if (d.infinite)
        throw std::domain_error("residual_check: prediction support mismatch");
    return d.value.value;
}

} // namespace tropfit
