#pragma once

// Scalar arithmetic for the two concrete tropical semifields:
//
//   max-plus   (R u {-inf}, -inf, 0, max, +)   "max_plus"
//   max-times  (R>=0,        0,   1, max, *)   "max_times"
//
// Addition (oplus) is idempotent and selective, multiplication (otimes) is
// invertible on nonzero elements, and powers extend to real exponents.
// Both semifields are isomorphic via exp/log.

#include <string>

namespace tropfit {

enum class Semifield { max_plus, max_times };

// Carrier value of the semifield zero (absorbing element of otimes).
double zero_of(Semifield tag);
// Carrier value of the semifield identity.
double one_of(Semifield tag);

std::string to_string(Semifield tag);

/// A real value interpreted in one of the two semifields. max_plus uses the
/// IEEE -inf for the zero element; max_times uses exact 0.0.
struct TropScalar {
    double value;
    Semifield tag;
};

// Checked constructor: rejects NaN (breaks the total order) and, for
// max_times, negative values (outside the carrier).
TropScalar trop(double value, Semifield tag);

TropScalar trop_zero(Semifield tag);
TropScalar trop_one(Semifield tag);

bool is_zero(TropScalar a);
bool is_one(TropScalar a);

/// Idempotent addition: max under the natural order of the carrier.
TropScalar oplus(TropScalar a, TropScalar b);

/// Multiplication: + in max_plus, * in max_times. Zero is absorbing.
TropScalar otimes(TropScalar a, TropScalar b);

/// Multiplicative inverse of a nonzero element: -a in max_plus, 1/a in
/// max_times. Throws std::domain_error on the zero element.
TropScalar inv(TropScalar a);

/// Tropical power with real exponent: r*a in max_plus, a^r in max_times.
/// tpow(a, 0) is the identity for nonzero a; tpow(zero, r) is zero for r > 0
/// and a domain error for r <= 0.
TropScalar tpow(TropScalar a, double r);

/// Dual minimum: min under the natural order, equal to
/// inv(oplus(inv a, inv b)) on nonzero operands and zero otherwise.
TropScalar tmin(TropScalar a, TropScalar b);

// Semifield isomorphisms. log maps max_times into max_plus (zero -> zero),
// exp maps back.
TropScalar to_maxplus(TropScalar a);
TropScalar to_maxtimes(TropScalar a);

} // namespace tropfit
