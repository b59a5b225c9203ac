#include "tropfit/fitter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace tropfit {

namespace {

constexpr double kDuplicateAbscissaTol = 1e-12;

void validate_config(const FitConfig& config, std::size_t m) {
    if (config.n_terms < 1)
        throw std::invalid_argument("fit: n_terms must be at least 1");
    if (static_cast<std::size_t>(config.n_terms) > m)
        throw std::invalid_argument("fit: n_terms exceeds the sample count");
    if (config.tie_tolerance < 0.0 || config.exponent_merge_tol < 0.0)
        throw std::invalid_argument("fit: tolerances must be nonnegative");
}

// phi(p) = (+)_i y_i^-1 p^(x_i), evaluated directly so that abscissas closer
// than the exponent merge tolerance are not fused away.
double eval_phi_global(const SampleSet& samples, double p) {
    double acc = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < samples.size(); ++i)
        acc = std::max(acc, samples.xs[i] * p - samples.ys[i]);
    return acc;
}

double state_delta(const ClusterState& state) {
    double acc = -std::numeric_limits<double>::infinity();
    for (const Cluster& c : state.clusters)
        acc = std::max(acc, c.minres.mu);
    return acc;
}

void run_indexed(std::size_t count, Exec exec, const std::function<void(std::size_t)>& body) {
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(count); ++i)
            body(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
    }
}

} // namespace

SampleSet make_samples(std::vector<double> xs, std::vector<double> ys, Semifield tag) {
    if (xs.empty() || xs.size() != ys.size())
        throw std::invalid_argument("make_samples: need equal, nonempty x and y lists");
    for (double v : xs) (void)trop(v, tag);
    for (double v : ys) (void)trop(v, tag);
    if (tag == Semifield::max_plus) {
        for (double v : xs)
            if (std::isinf(v)) throw std::invalid_argument("make_samples: abscissa must be finite");
        for (double v : ys)
            if (std::isinf(v)) throw std::invalid_argument("make_samples: value must be finite");
    } else {
        for (double v : xs)
            if (v <= 0.0) throw std::invalid_argument("make_samples: max-times abscissa must be positive");
        for (double v : ys)
            if (v <= 0.0) throw std::invalid_argument("make_samples: max-times value must be positive");
    }
    std::vector<double> sorted = xs;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] - sorted[i - 1] <= kDuplicateAbscissaTol)
            throw std::invalid_argument("make_samples: duplicate abscissas");
    return SampleSet{tag, std::move(xs), std::move(ys)};
}

TropPolynomial build_phi(const SampleSet& samples, int i, double merge_tol) {
    if (samples.tag != Semifield::max_plus)
        throw std::invalid_argument("build_phi: samples must be max-plus (transform max-algebra data first)");
    if (i < 0 || static_cast<std::size_t>(i) >= samples.size())
        throw std::out_of_range("build_phi: sample index out of range");
    std::vector<Monomial> terms;
    terms.reserve(samples.size());
    for (std::size_t j = 0; j < samples.size(); ++j)
        terms.push_back(Monomial{samples.ys[i] - samples.ys[j], samples.xs[j] - samples.xs[i]});
    return normalize(std::move(terms), Semifield::max_plus, merge_tol);
}

double merge_cost(const ClusterState& state, std::size_t u, std::size_t v) {
    if (u >= state.clusters.size() || v >= state.clusters.size() || u == v)
        throw std::invalid_argument("merge_cost: unknown cluster pair");
    const TropPolynomial merged =
        poly_sum(state.clusters[u].poly, state.clusters[v].poly, state.exponent_merge_tol);
    return minimize(merged).mu;
}

namespace {

// Deterministic Step-1 selection: minimum cached cost, ties within
// tie_tolerance broken by the lexicographically least pair of smallest
// member indices.
std::pair<std::size_t, std::size_t> select_merge_pair(const ClusterState& st) {
    const std::size_t k = st.clusters.size();
    double cmin = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
            cmin = std::min(cmin, st.pair_costs[a][b]);

    std::pair<int, int> best_key{std::numeric_limits<int>::max(),
                                 std::numeric_limits<int>::max()};
    std::pair<std::size_t, std::size_t> best{0, 0};
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
            if (st.pair_costs[a][b] > cmin + st.tie_tolerance) continue;
            const int ma = st.clusters[a].members.front();
            const int mb = st.clusters[b].members.front();
            const std::pair<int, int> key{std::min(ma, mb), std::max(ma, mb)};
            if (key < best_key) {
                best_key = key;
                best = {a, b};
            }
        }
    }
    return best;
}

void apply_merge(ClusterState& st, std::size_t u, std::size_t v, Exec exec) {
    Cluster merged;
    merged.members.resize(st.clusters[u].members.size() + st.clusters[v].members.size());
    std::merge(st.clusters[u].members.begin(), st.clusters[u].members.end(),
               st.clusters[v].members.begin(), st.clusters[v].members.end(),
               merged.members.begin());
    merged.poly = poly_sum(st.clusters[u].poly, st.clusters[v].poly, st.exponent_merge_tol);
    merged.minres = minimize(merged.poly);

    // Drop u and v, keep every other cluster (and their mutual costs), then
    // append the merged cluster and compute only its cost row.
    const std::size_t k = st.clusters.size();
    std::vector<std::size_t> kept;
    kept.reserve(k - 2);
    for (std::size_t i = 0; i < k; ++i)
        if (i != u && i != v) kept.push_back(i);

    std::vector<Cluster> clusters;
    clusters.reserve(kept.size() + 1);
    for (std::size_t i : kept) clusters.push_back(std::move(st.clusters[i]));
    clusters.push_back(std::move(merged));

    const std::size_t nk = clusters.size();
    std::vector<std::vector<double>> costs(nk, std::vector<double>(nk, 0.0));
    for (std::size_t a = 0; a < kept.size(); ++a)
        for (std::size_t b = a + 1; b < kept.size(); ++b)
            costs[a][b] = costs[b][a] = st.pair_costs[kept[a]][kept[b]];

    st.clusters = std::move(clusters);
    st.pair_costs = std::move(costs);
    const std::size_t w = nk - 1;
    run_indexed(w, exec, [&](std::size_t o) {
        const double c = merge_cost(st, o, w);
        st.pair_costs[o][w] = c;
        st.pair_costs[w][o] = c;
    });
    ++st.step;
}

} // namespace

ClusterState agglomerate(const SampleSet& samples, const FitConfig& config,
                         const std::function<void(const ClusterState&)>& observer) {
    if (samples.tag != Semifield::max_plus)
        throw std::invalid_argument("agglomerate: samples must be max-plus");
    validate_config(config, samples.size());

    const std::size_t m = samples.size();
    ClusterState st;
    st.tie_tolerance = config.tie_tolerance;
    st.exponent_merge_tol = config.exponent_merge_tol;
    st.clusters.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        Cluster c;
        c.members = {static_cast<int>(i)};
        c.poly = build_phi(samples, static_cast<int>(i), config.exponent_merge_tol);
        c.minres = minimize(c.poly);
        st.clusters.push_back(std::move(c));
    }
    if (observer) observer(st);
    if (st.clusters.size() <= static_cast<std::size_t>(config.n_terms))
        return st; // N == M: the singleton partition is final

    if (config.n_terms == 1 && !observer) {
        // Forced partition: fold everything into one cluster without the
        // pair-cost machinery.
        Cluster all = std::move(st.clusters.front());
        for (std::size_t i = 1; i < m; ++i) {
            const Cluster& c = st.clusters[i];
            all.members.push_back(c.members.front());
            all.poly = poly_sum(all.poly, c.poly, st.exponent_merge_tol);
        }
        all.minres = minimize(all.poly);
        st.clusters.assign(1, std::move(all));
        st.step = static_cast<int>(m) - 1;
        return st;
    }

    st.pair_costs.assign(m, std::vector<double>(m, 0.0));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(m * (m - 1) / 2);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            pairs.emplace_back(a, b);
    run_indexed(pairs.size(), config.exec, [&](std::size_t t) {
        const auto [a, b] = pairs[t];
        const double c = merge_cost(st, a, b);
        st.pair_costs[a][b] = c;
        st.pair_costs[b][a] = c;
    });

    while (st.clusters.size() > static_cast<std::size_t>(config.n_terms)) {
        const auto [u, v] = select_merge_pair(st);
        apply_merge(st, u, v, config.exec);
        if (observer) observer(st);
    }
    return st;
}

FitResult finalize(const ClusterState& state, const SampleSet& samples) {
    if (samples.tag != Semifield::max_plus)
        throw std::invalid_argument("finalize: samples must be max-plus");
    const std::size_t n = state.clusters.size();

    struct Entry {
        double p;
        std::size_t idx;
    };
    std::vector<Entry> order;
    order.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
        order.push_back(Entry{select_point(state.clusters[j].minres), j});
    std::sort(order.begin(), order.end(), [&](const Entry& a, const Entry& b) {
        if (a.p != b.p) return a.p < b.p;
        return state.clusters[a.idx].members.front() < state.clusters[b.idx].members.front();
    });

    FitResult r;
    r.algebra = Semifield::max_plus;
    r.n_terms = static_cast<int>(n);
    r.delta_star = state_delta(state);
    r.error = 0.5 * r.delta_star; // tropical square root in max-plus

    for (const Entry& e : order) {
        const Cluster& c = state.clusters[e.idx];
        r.exponents.push_back(e.p);
        r.coefficients.push_back(r.error - eval_phi_global(samples, e.p));
        r.per_cluster_minima.push_back(c.minres.mu);
        r.intervals.push_back({c.minres.lo, c.minres.hi});
        std::vector<int> part;
        part.reserve(c.members.size());
        for (int i : c.members) part.push_back(i + 1);
        r.partition.push_back(std::move(part));
    }

    r.residuals.reserve(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double pred = predict(r, samples.xs[i]);
        r.residuals.push_back(std::abs(pred - samples.ys[i]));
    }
    return r;
}

FitResult fit(const SampleSet& samples, const FitConfig& config) {
    if (config.tag != Semifield::max_plus || samples.tag != Semifield::max_plus)
        throw std::invalid_argument("fit: max-plus samples and config required (see fit_maxalgebra)");
    const ClusterState st = agglomerate(samples, config);
    return finalize(st, samples);
}

FitResult fit_maxalgebra(const SampleSet& samples, const FitConfig& config) {
    if (samples.tag != Semifield::max_times || config.tag != Semifield::max_times)
        throw std::invalid_argument("fit_maxalgebra: max-times samples and config required");

    SampleSet logged;
    logged.tag = Semifield::max_plus;
    logged.xs.reserve(samples.size());
    logged.ys.reserve(samples.size());
    for (double v : samples.xs) logged.xs.push_back(std::log(v));
    for (double v : samples.ys) logged.ys.push_back(std::log(v));

    FitConfig inner = config;
    inner.tag = Semifield::max_plus;
    FitResult r = fit(logged, inner);

    r.algebra = Semifield::max_times;
    r.delta_star = std::exp(r.delta_star);
    r.error = std::exp(r.error);
    for (double& c : r.coefficients) c = std::exp(c);
    for (double& d : r.per_cluster_minima) d = std::exp(d);
    for (double& res : r.residuals) res = std::exp(res);
    // Exponents and their solution intervals live in the exponent domain and
    // pass through unchanged.
    return r;
}

double predict(const FitResult& result, double x) {
    if (result.exponents.empty())
        throw std::invalid_argument("predict: empty fit result");
    if (std::isnan(x))
        throw std::domain_error("predict: NaN argument");
    if (result.algebra == Semifield::max_plus) {
        if (std::isinf(x))
            throw std::domain_error("predict: argument must be finite in max-plus");
        double acc = -std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < result.exponents.size(); ++j)
            acc = std::max(acc, result.exponents[j] * x + result.coefficients[j]);
        return acc;
    }
    if (x <= 0.0 || std::isinf(x))
        throw std::domain_error("predict: argument must be a positive real in max-times");
    double acc = 0.0;
    for (std::size_t j = 0; j < result.exponents.size(); ++j)
        acc = std::max(acc, result.coefficients[j] * std::pow(x, result.exponents[j]));
    return acc;
}

std::vector<SweepEntry> sweep(const SampleSet& samples, int n_min, int n_max, Exec exec) {
    if (n_min < 1 || n_min > n_max || static_cast<std::size_t>(n_max) > samples.size())
        throw std::invalid_argument("sweep: invalid cluster-count range");

    if (samples.tag == Semifield::max_times) {
        SampleSet logged;
        logged.tag = Semifield::max_plus;
        for (double v : samples.xs) logged.xs.push_back(std::log(v));
        for (double v : samples.ys) logged.ys.push_back(std::log(v));
        std::vector<SweepEntry> entries = sweep(logged, n_min, n_max, exec);
        for (SweepEntry& e : entries) e.delta_star = std::exp(e.delta_star);
        return entries;
    }

    std::vector<SweepEntry> entries;
    FitConfig config;
    config.n_terms = n_min;
    config.exec = exec;
    agglomerate(samples, config, [&](const ClusterState& st) {
        const int k = static_cast<int>(st.clusters.size());
        if (k >= n_min && k <= n_max)
            entries.push_back(SweepEntry{k, state_delta(st)});
    });
    std::sort(entries.begin(), entries.end(),
              [](const SweepEntry& a, const SweepEntry& b) { return a.n_terms < b.n_terms; });
    return entries;
}

} // namespace tropfit
