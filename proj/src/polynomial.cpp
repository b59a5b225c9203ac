#include "tropfit/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tropfit {

TropPolynomial normalize(std::vector<Monomial> terms, Semifield tag, double merge_tol) {
    if (terms.empty())
        throw std::invalid_argument("normalize: empty term list");
    const double zero = zero_of(tag);
    for (const Monomial& m : terms) {
        if (std::isnan(m.coeff) || std::isnan(m.exp))
            throw std::invalid_argument("normalize: NaN in monomial");
        if (m.coeff == zero || (tag == Semifield::max_times && m.coeff < 0.0))
            throw std::invalid_argument("normalize: coefficient outside the nonzero carrier");
    }
    std::sort(terms.begin(), terms.end(),
              [](const Monomial& a, const Monomial& b) { return a.exp < b.exp; });

    TropPolynomial out;
    out.tag = tag;
    out.monomials.reserve(terms.size());
    for (const Monomial& m : terms) {
        // Groups are anchored at their first exponent, so surviving
        // exponents are separated by more than merge_tol and normalize is
        // idempotent.
        if (!out.monomials.empty() && m.exp - out.monomials.back().exp <= merge_tol) {
            Monomial& last = out.monomials.back();
            last.coeff = std::max(last.coeff, m.coeff);
        } else {
            out.monomials.push_back(m);
        }
    }
    return out;
}

TropPolynomial poly_sum(const TropPolynomial& p, const TropPolynomial& q, double merge_tol) {
    if (p.tag != q.tag)
        throw std::invalid_argument("poly_sum: semifield tag mismatch");
    std::vector<Monomial> terms;
    terms.reserve(p.monomials.size() + q.monomials.size());
    terms.insert(terms.end(), p.monomials.begin(), p.monomials.end());
    terms.insert(terms.end(), q.monomials.begin(), q.monomials.end());
    return normalize(std::move(terms), p.tag, merge_tol);
}

double eval_maxplus(const TropPolynomial& p, double x) {
    double acc = -std::numeric_limits<double>::infinity();
    for (const Monomial& m : p.monomials)
        acc = std::max(acc, m.coeff + m.exp * x);
    return acc;
}

TropScalar eval(const TropPolynomial& p, TropScalar x) {
    if (x.tag != p.tag)
        throw std::invalid_argument("eval: semifield tag mismatch");
    if (is_zero(x)) {
        // zero^r is zero for r > 0 and undefined for r < 0; only the
        // exponent-0 monomial survives.
        double acc = zero_of(p.tag);
        for (const Monomial& m : p.monomials) {
            if (m.exp < 0.0)
                throw std::domain_error("eval: zero argument with a negative exponent");
            if (m.exp == 0.0) acc = std::max(acc, m.coeff);
        }
        return TropScalar{acc, p.tag};
    }
    if (p.tag == Semifield::max_plus)
        return TropScalar{eval_maxplus(p, x.value), p.tag};
    double acc = 0.0;
    for (const Monomial& m : p.monomials)
        acc = std::max(acc, m.coeff * std::pow(x.value, m.exp));
    return TropScalar{acc, p.tag};
}

namespace {

// Lemma-style closed form for a max-plus polynomial, on raw doubles.
MinResult minimize_maxplus(const std::vector<Monomial>& ms, std::size_t* pair_ops) {
    const double ninf = -std::numeric_limits<double>::infinity();
    bool has_nonpos = false, has_nonneg = false;
    for (const Monomial& m : ms) {
        if (m.exp <= 0.0) has_nonpos = true;
        if (m.exp >= 0.0) has_nonneg = true;
    }
    if (!has_nonpos || !has_nonneg)
        throw std::domain_error("minimize: infimum is the semifield zero and is not attained");

    std::size_t ops = 0;
    double mu = ninf;
    // Every (negative, positive) exponent pair contributes the value of the
    // two-line envelope at its crossing; exponent-0 monomials contribute
    // their coefficient directly.
    for (const Monomial& mj : ms) {
        if (mj.exp >= 0.0) continue;
        for (const Monomial& mk : ms) {
            if (mk.exp <= 0.0) continue;
            ++ops;
            const double denom = mj.exp - mk.exp;
            const double v = (-mk.exp / denom) * mj.coeff + (mj.exp / denom) * mk.coeff;
            mu = std::max(mu, v);
        }
    }
    for (const Monomial& m : ms)
        if (m.exp == 0.0) mu = std::max(mu, m.coeff);
    if (pair_ops) *pair_ops += ops;

    // Solutions are exactly the x with coeff_j + exp_j*x <= mu for every j.
    MinResult r;
    r.tag = Semifield::max_plus;
    r.mu = mu;
    for (const Monomial& m : ms) {
        const double bound = (mu - m.coeff) / m.exp;
        if (m.exp < 0.0)
            r.lo = r.lo ? std::max(*r.lo, bound) : bound;
        else if (m.exp > 0.0)
            r.hi = r.hi ? std::min(*r.hi, bound) : bound;
    }
    return r;
}

} // namespace

MinResult minimize(const TropPolynomial& p, std::size_t* pair_ops) {
    if (p.monomials.empty())
        throw std::invalid_argument("minimize: empty polynomial");
    if (p.tag == Semifield::max_plus)
        return minimize_maxplus(p.monomials, pair_ops);

    // Transport to max-plus (log of coefficients, exponents unchanged),
    // minimize there, and map the value and bounds back with exp.
    std::vector<Monomial> logged;
    logged.reserve(p.monomials.size());
    for (const Monomial& m : p.monomials)
        logged.push_back(Monomial{std::log(m.coeff), m.exp});
    MinResult inner = minimize_maxplus(logged, pair_ops);

    MinResult r;
    r.tag = Semifield::max_times;
    r.mu = std::exp(inner.mu);
    if (inner.lo) r.lo = std::exp(*inner.lo);
    if (inner.hi) r.hi = std::exp(*inner.hi);
    return r;
}

double select_point(const MinResult& r) {
    if (r.lo && r.hi) {
        if (r.tag == Semifield::max_plus) return 0.5 * (*r.lo + *r.hi);
        return std::sqrt(*r.lo * *r.hi); // geometric mean: midpoint in log domain
    }
    if (r.lo) return *r.lo;
    if (r.hi) return *r.hi;
    return one_of(r.tag);
}

} // namespace tropfit
