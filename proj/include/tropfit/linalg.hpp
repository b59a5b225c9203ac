#pragma once

// Tropical vectors and matrices, the multiplicative conjugate, the span
// distance d(x, y) = y^- x (+) x^- y, and the closed-form best approximate
// solution of A (x) x = b:
//
//   Delta = (A (b^- A)^-)^- b,   error = Delta^(1/2),
//   x*    = Delta^(1/2) (x) (b^- A)^-.
//
// In max-plus the distance coincides with the Chebyshev metric; in max-times
// it is the symmetric ratio metric with values in [1, inf).

#include <cstddef>
#include <vector>

#include "tropfit/semifield.hpp"

namespace tropfit {

struct TropVector {
    Semifield tag = Semifield::max_plus;
    std::vector<double> entries;

    std::size_t size() const { return entries.size(); }
};

struct TropMatrix {
    Semifield tag = Semifield::max_plus;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> entries; // row-major

    double at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
    double& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
};

// Checked constructors (NaN and carrier validation on every entry).
TropVector make_vector(std::vector<double> entries, Semifield tag);
TropMatrix make_matrix(std::size_t rows, std::size_t cols, std::vector<double> entries,
                       Semifield tag);

bool is_regular(const TropVector& v);          // no zero components
bool is_row_regular(const TropMatrix& a);      // no zero rows
bool is_col_regular(const TropMatrix& a);      // no zero columns
bool is_regular(const TropMatrix& a);          // both

/// y_i = (+)_k a_ik (x) x_k, with a fixed in-row reduction order.
TropVector matvec(const TropMatrix& a, const TropVector& x);

/// Entrywise multiplicative conjugate (zero components stay zero). Throws on
/// the all-zero vector.
TropVector conjugate(const TropVector& x);

/// Distance value, or the distinguished sentinel "greater than any carrier
/// element" used when the supports differ.
struct TropDistance {
    bool infinite = false;
    TropScalar value{0.0, Semifield::max_plus}; // meaningful only when !infinite
};

TropDistance distance(const TropVector& x, const TropVector& y);

/// Delta = (A (b^- A)^-)^- b for regular A and b; always >= the identity.
TropScalar residual_delta(const TropMatrix& a, const TropVector& b);

struct BestApproxResult {
    TropScalar delta;    // squared best approximation error
    TropScalar error;    // delta^(1/2)
    TropVector solution; // x*
    bool exact = false;  // delta equals the identity within 1e-12
};

BestApproxResult best_approx_solve(const TropMatrix& a, const TropVector& b);

} // namespace tropfit
