// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance is pinned here.
//
//  1. paper reproduction, max-plus (N = 5/7/11), each under 1 s
//  2. sweep N = 2..12 against the published error curve, under 2 s
//  3. paper reproduction, max-algebra (N = 5/7, duplicate monomial fusion)
//  4. residual contract: recomputed distance equals sqrt(Delta*) to 1e-9,
//     and 10,000 random coefficient perturbations never beat it
//  5. published exponents lie in the computed solution intervals (1e-3)
//  6. closed-form minima agree with a 1e-4 grid on 1,000 random polynomials
//  7. oracle dominance over greedy on 200 random small instances
//  8. randomized algebraic-law suite, at least 10,000 cases, zero failures

#include <chrono>
#include <cmath>
#include <cstdio>
#include <array>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "tropfit/fitter.hpp"
#include "tropfit/io.hpp"
#include "tropfit/linalg.hpp"
#include "tropfit/oracle.hpp"

using namespace tropfit;

namespace {

const Semifield MP = Semifield::max_plus;
const Semifield MT = Semifield::max_times;

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("criterion %d: %s — %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
    if (!pass) ++failures;
}

double elapsed_ms(const std::function<void()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

SampleSet paper_samples(Semifield tag) {
    const Dataset d = demo_dataset();
    return make_samples(d.xs, d.ys, tag);
}

FitResult fit_paper(Semifield tag, int n) {
    FitConfig cfg;
    cfg.tag = tag;
    cfg.n_terms = n;
    const SampleSet s = paper_samples(tag);
    return tag == MP ? fit(s, cfg) : fit_maxalgebra(s, cfg);
}

SampleSet random_samples(std::mt19937_64& rng, int m) {
    std::uniform_real_distribution<double> xd(-3.0, 3.0), yd(-2.0, 2.0);
    std::vector<double> xs, ys;
    while (static_cast<int>(xs.size()) < m) {
        const double x = xd(rng);
        bool clash = false;
        for (double seen : xs)
            if (std::abs(seen - x) < 1e-3) clash = true;
        if (clash) continue;
        xs.push_back(x);
        ys.push_back(yd(rng));
    }
    return make_samples(xs, ys, MP);
}

// Mixed-sign random polynomial; exponent magnitudes in [0.2, 4] keep the
// 1e-4 grid's value error within the 2e-4 budget and the solution interval
// inside [-50, 50].
TropPolynomial random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len(2, 8);
    std::uniform_real_distribution<double> coeff(-3.0, 3.0);
    std::uniform_real_distribution<double> mag(0.2, 4.0);
    const int l = len(rng);
    std::vector<Monomial> ms;
    ms.push_back(Monomial{coeff(rng), -mag(rng)});
    ms.push_back(Monomial{coeff(rng), mag(rng)});
    for (int j = 2; j < l; ++j)
        ms.push_back(Monomial{coeff(rng), (rng() & 1 ? 1.0 : -1.0) * mag(rng)});
    return normalize(std::move(ms), MP);
}

// Distance d(X(p*) theta, y) for an arbitrary coefficient vector.
double distance_for_theta(const FitResult& fit_result, const SampleSet& samples,
                          const std::vector<double>& theta) {
    double worst = samples.tag == MP ? 0.0 : 1.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        double pred = samples.tag == MP ? -std::numeric_limits<double>::infinity() : 0.0;
        for (std::size_t j = 0; j < theta.size(); ++j) {
            const double term = samples.tag == MP
                                    ? fit_result.exponents[j] * samples.xs[i] + theta[j]
                                    : theta[j] * std::pow(samples.xs[i], fit_result.exponents[j]);
            pred = std::max(pred, term);
        }
        const double span = samples.tag == MP
                                ? std::abs(pred - samples.ys[i])
                                : std::max(pred / samples.ys[i], samples.ys[i] / pred);
        worst = std::max(worst, span);
    }
    return worst;
}

void criterion1() {
    const double cases[3][2] = {{5, 0.1054}, {7, 0.0321}, {11, 0.0}};
    bool pass = true;
    std::string detail;
    for (const auto& c : cases) {
        FitResult r;
        const double ms = elapsed_ms([&] { r = fit_paper(MP, static_cast<int>(c[0])); });
        const bool value_ok = std::abs(r.delta_star - c[1]) <= 2e-3;
        const bool time_ok = ms < 1000.0;
        pass = pass && value_ok && time_ok;
        detail += "N=" + std::to_string(static_cast<int>(c[0])) + " delta=" +
                  std::to_string(r.delta_star) + " (" + std::to_string(ms) + " ms) ";
    }
    report(1, pass, detail);
}

void criterion2() {
    const std::vector<double> expected{1.1690, 0.5234, 0.1722, 0.1054, 0.0616, 0.0321,
                                       0.0263, 0.0240, 0.0114, 0.0, 0.0};
    std::vector<SweepEntry> entries;
    const double ms = elapsed_ms([&] { entries = sweep(paper_samples(MP), 2, 12); });
    bool pass = entries.size() == expected.size() && ms < 2000.0;
    for (std::size_t k = 0; pass && k < entries.size(); ++k) {
        if (std::abs(entries[k].delta_star - expected[k]) > 2e-3) pass = false;
        if (k > 0 && entries[k].delta_star > entries[k - 1].delta_star + 1e-12) pass = false;
    }
    report(2, pass, "11 entries within 2e-3, nonincreasing (" + std::to_string(ms) + " ms)");
}

void criterion3() {
    FitResult r5, r7;
    const double ms5 = elapsed_ms([&] { r5 = fit_paper(MT, 5); });
    const double ms7 = elapsed_ms([&] { r7 = fit_paper(MT, 7); });
    std::vector<Monomial> fitted;
    for (int j = 0; j < 7; ++j)
        fitted.push_back(Monomial{r7.coefficients[j], r7.exponents[j]});
    const std::size_t distinct = normalize(fitted, MT).monomials.size();
    const bool pass = std::abs(r5.delta_star - 1.0330) <= 2e-3 &&
                      std::abs(r7.delta_star - 1.0238) <= 2e-3 && distinct == 6 &&
                      ms5 < 1000.0 && ms7 < 1000.0;
    report(3, pass,
           "N=5 delta=" + std::to_string(r5.delta_star) + ", N=7 delta=" +
               std::to_string(r7.delta_star) + ", distinct monomials=" +
               std::to_string(distinct) + " (" + std::to_string(ms5 + ms7) + " ms)");
}

void criterion4() {
    std::mt19937_64 rng(404);
    bool pass = true;
    int fits_checked = 0;
    double worst_gap = 0.0;

    const auto check_fit = [&](const FitResult& r, const SampleSet& s, bool perturb) {
        ++fits_checked;
        const double recomputed = residual_check(r, s);
        worst_gap = std::max(worst_gap, std::abs(recomputed - r.error));
        if (std::abs(recomputed - r.error) > 1e-9) pass = false;
        if (!perturb) return;
        std::uniform_real_distribution<double> unit(-1.0, 1.0);
        const double scales[4] = {1e-3, 1e-2, 0.1, 0.5};
        for (int c = 0; c < 10000; ++c) {
            std::vector<double> theta = r.coefficients;
            const double s0 = scales[c % 4];
            for (double& t : theta) {
                if (s.tag == MP)
                    t += s0 * unit(rng);
                else
                    t *= std::exp(s0 * unit(rng));
            }
            if (distance_for_theta(r, s, theta) < r.error - 1e-9) {
                pass = false;
                return;
            }
        }
    };

    check_fit(fit_paper(MP, 5), paper_samples(MP), true);
    check_fit(fit_paper(MP, 7), paper_samples(MP), false);
    check_fit(fit_paper(MP, 11), paper_samples(MP), false);
    check_fit(fit_paper(MT, 5), paper_samples(MT), true);
    check_fit(fit_paper(MT, 7), paper_samples(MT), false);
    for (int t = 0; t < 20; ++t) {
        const SampleSet s = random_samples(rng, 4 + static_cast<int>(rng() % 7));
        FitConfig cfg;
        cfg.n_terms = 1 + static_cast<int>(rng() % 4);
        const FitResult r = fit(s, cfg);
        check_fit(r, s, t < 3);
    }
    report(4, pass,
           std::to_string(fits_checked) + " fits, worst |d - sqrt(Delta*)| = " +
               std::to_string(worst_gap) + ", 10k perturbations on 5 fits");
}

void criterion5() {
    struct Fixture {
        Semifield tag;
        int n;
        std::vector<double> p_paper;
    };
    const std::vector<Fixture> fixtures{
        {MP, 5, {-8.8868, -1.3989, 0.2591, 1.3982, 2.7450}},
        {MP, 7, {-8.8868, -2.0153, -0.8395, 0.2591, 1.3982, 2.3938, 3.2114}},
        {MT, 5, {-5.9139, -2.9957, -0.2581, 2.3669, 4.0040}},
        {MT, 7, {-5.9139, -3.3320, -2.5249, -0.2581, 2.3669, 4.0040, 4.0040}},
    };
    bool pass = true;
    int checked = 0;
    for (const Fixture& f : fixtures) {
        const FitResult r = fit_paper(f.tag, f.n);
        if (r.intervals.size() != f.p_paper.size()) {
            pass = false;
            continue;
        }
        for (std::size_t j = 0; j < f.p_paper.size(); ++j) {
            ++checked;
            if (r.intervals[j][0] && f.p_paper[j] < *r.intervals[j][0] - 1e-3) pass = false;
            if (r.intervals[j][1] && f.p_paper[j] > *r.intervals[j][1] + 1e-3) pass = false;
        }
    }
    report(5, pass, std::to_string(checked) + " published exponents inside their intervals");
}

void criterion6() {
    std::mt19937_64 rng(606);
    bool pass = true;
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const TropPolynomial p = random_poly(rng);
        const MinResult closed = minimize(p);
        const auto [arg, val] = grid_minimize(p, -50.0, 50.0, 1e-4);
        worst = std::max(worst, std::abs(val - closed.mu));
        if (std::abs(val - closed.mu) > 2e-4) pass = false;
        if (!closed.lo || !closed.hi) {
            pass = false;
            continue;
        }
        if (std::abs(eval_maxplus(p, *closed.lo) - closed.mu) > 1e-9) pass = false;
        if (std::abs(eval_maxplus(p, *closed.hi) - closed.mu) > 1e-9) pass = false;
    }
    report(6, pass, "1000 polynomials, worst |grid - mu| = " + std::to_string(worst));
}

void criterion7() {
    std::mt19937_64 rng(707);
    bool pass = true;
    int equal = 0;
    for (int t = 0; t < 200; ++t) {
        const int m = 3 + static_cast<int>(rng() % 6);
        const int n = 1 + static_cast<int>(rng() % std::min(3, m));
        const SampleSet s = random_samples(rng, m);
        FitConfig cfg;
        cfg.n_terms = n;
        const double greedy = fit(s, cfg).delta_star;
        const double exact = exact_fit(s, n).delta_exact;
        if (exact > greedy + 1e-12) pass = false;
        if (std::abs(exact - greedy) <= 1e-9) ++equal;
    }
    report(7, pass,
           "oracle <= greedy on 200/200; equality rate " + std::to_string(equal) + "/200");
}

void criterion8() {
    std::mt19937_64 rng(808);
    long cases = 0;
    long bad = 0;

    const auto draw = [&](Semifield tag) {
        std::uniform_real_distribution<double> u(-40.0, 40.0);
        const double v = u(rng);
        return trop(tag == MP ? v : std::exp(v / 10.0), tag);
    };

    for (Semifield tag : {MP, MT}) {
        for (int t = 0; t < 2500; ++t) {
            const TropScalar a = draw(tag), b = draw(tag), c = draw(tag);
            ++cases;
            if (oplus(a, a).value != a.value) ++bad;
            ++cases;
            const double s = oplus(a, b).value;
            if (s != a.value && s != b.value) ++bad;
            ++cases;
            if (tag == MP ? otimes(a, inv(a)).value != 0.0
                          : std::abs(otimes(a, inv(a)).value - 1.0) >
                                std::numeric_limits<double>::epsilon())
                ++bad;
            ++cases;
            const TropScalar lo = a.value <= b.value ? a : b;
            const TropScalar hi = a.value <= b.value ? b : a;
            if (oplus(lo, c).value > oplus(hi, c).value ||
                otimes(lo, c).value > otimes(hi, c).value * (tag == MP ? 1.0 : 1.0 + 1e-14))
                ++bad;
        }
    }
    for (int t = 0; t < 2500; ++t) {
        std::uniform_real_distribution<double> u(-50.0, 50.0);
        const double a = u(rng);
        ++cases;
        if (std::abs(to_maxplus(to_maxtimes(trop(a, MP))).value - a) > 1e-12) ++bad;
    }

    // distributive identity: (+) of row minima vs min over assignments
    std::uniform_int_distribution<int> dim(1, 5);
    std::uniform_real_distribution<double> val(-10.0, 10.0);
    for (int t = 0; t < 400; ++t) {
        const int m = dim(rng), n = dim(rng);
        std::vector<std::vector<double>> x(m, std::vector<double>(n));
        for (auto& row : x)
            for (double& v : row) v = val(rng);
        double lhs = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < m; ++i) {
            double rowmin = x[i][0];
            for (int j = 1; j < n; ++j) rowmin = std::min(rowmin, x[i][j]);
            lhs = std::max(lhs, rowmin);
        }
        double rhs = std::numeric_limits<double>::infinity();
        std::vector<int> assign(m, 0);
        while (true) {
            double acc = -std::numeric_limits<double>::infinity();
            for (int i = 0; i < m; ++i) acc = std::max(acc, x[i][assign[i]]);
            rhs = std::min(rhs, acc);
            int i = m - 1;
            while (i >= 0 && assign[i] == n - 1) assign[i--] = 0;
            if (i < 0) break;
            ++assign[i];
        }
        ++cases;
        if (lhs != rhs) ++bad;
    }

    // distributive identity: min of a max-separable sum over a grid
    for (int t = 0; t < 400; ++t) {
        const int n = 1 + static_cast<int>(rng() % 3);
        std::uniform_real_distribution<double> coeff(-3.0, 3.0);
        std::vector<std::array<double, 4>> f(n);
        for (auto& q : f)
            q = {coeff(rng), std::abs(coeff(rng)), coeff(rng), std::abs(coeff(rng))};
        const auto feval = [&](int j, double x) {
            return std::max(f[j][0] + f[j][1] * x, f[j][2] - f[j][3] * x);
        };
        constexpr int kGrid = 21;
        const auto grid_point = [](int k) { return -3.0 + 6.0 * k / (kGrid - 1); };
        double rhs = -std::numeric_limits<double>::infinity();
        for (int j = 0; j < n; ++j) {
            double mn = std::numeric_limits<double>::infinity();
            for (int k = 0; k < kGrid; ++k) mn = std::min(mn, feval(j, grid_point(k)));
            rhs = std::max(rhs, mn);
        }
        double lhs = std::numeric_limits<double>::infinity();
        std::vector<int> idx(n, 0);
        while (true) {
            double acc = -std::numeric_limits<double>::infinity();
            for (int j = 0; j < n; ++j) acc = std::max(acc, feval(j, grid_point(idx[j])));
            lhs = std::min(lhs, acc);
            int j = n - 1;
            while (j >= 0 && idx[j] == kGrid - 1) idx[j--] = 0;
            if (j < 0) break;
            ++idx[j];
        }
        ++cases;
        if (lhs != rhs) ++bad;
    }

    report(8, bad == 0 && cases >= 10000,
           std::to_string(cases) + " randomized cases, " + std::to_string(bad) + " failures");
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    if (failures == 0)
        std::printf("acceptance: all 8 criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return failures;
}
