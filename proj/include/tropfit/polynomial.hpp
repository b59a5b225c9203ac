#pragma once

// Generalized tropical Puiseux polynomials in one variable: sorted lists of
// (coefficient, real exponent) monomials with distinct exponents. In the
// max-plus reading a polynomial is the upper envelope of lines
// max_j(exp_j * x + coeff_j); in max-times it is max_j(coeff_j * x^exp_j).
//
// minimize() computes the exact minimum over the carrier in closed form
// together with the full interval of minimizers; its cost is O(L^2) over the
// (negative exponent, positive exponent) monomial pairs.

#include <cstddef>
#include <optional>
#include <vector>

#include "tropfit/semifield.hpp"

namespace tropfit {

struct Monomial {
    double coeff; // carrier value, never the semifield zero
    double exp;   // real exponent
};

struct TropPolynomial {
    Semifield tag = Semifield::max_plus;
    std::vector<Monomial> monomials; // strictly ascending exponents
};

// Exponents closer than this are float noise from repeated abscissa
// differences and get fused (keeping the oplus of the coefficients).
inline constexpr double kExponentMergeTol = 1e-9;

/// Sort monomials by exponent and fuse groups whose exponents lie within
/// merge_tol of the group's first exponent. Throws on an empty term list or
/// a zero coefficient.
TropPolynomial normalize(std::vector<Monomial> terms, Semifield tag,
                         double merge_tol = kExponentMergeTol);

/// Sum of two polynomials: normalize of the concatenated monomial lists.
TropPolynomial poly_sum(const TropPolynomial& p, const TropPolynomial& q,
                        double merge_tol = kExponentMergeTol);

/// Evaluate at a point of the carrier. The zero element is accepted only
/// when no exponent is negative.
TropScalar eval(const TropPolynomial& p, TropScalar x);

// Fast path used by the fitting kernels: max-plus evaluation at a plain
// double argument.
double eval_maxplus(const TropPolynomial& p, double x);

/// Minimum value mu of the polynomial over the carrier plus the closed
/// interval [lo, hi] of minimizers. An unset bound means the solution set is
/// unbounded on that side (in max-times: extends to the carrier boundary).
struct MinResult {
    Semifield tag = Semifield::max_plus;
    double mu = 0.0;
    std::optional<double> lo;
    std::optional<double> hi;
};

/// Closed-form minimization. Requires at least one exponent <= 0 and one
/// >= 0; otherwise the infimum is the semifield zero, is not attained, and a
/// std::domain_error is thrown. max_times polynomials are transported to
/// max_plus via log and the bounds mapped back, so both tags share one code
/// path. pair_ops, when given, accumulates the number of exponent-pair
/// evaluations (the O(L^2) term).
MinResult minimize(const TropPolynomial& p, std::size_t* pair_ops = nullptr);

/// Representative minimizer: midpoint of finite bounds (geometric mean in
/// max-times), the finite endpoint when one side is unbounded, the carrier
/// identity when both are.
double select_point(const MinResult& r);

} // namespace tropfit
