#include "tropfit/semifield.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tropfit {

namespace {

void require_same_tag(TropScalar a, TropScalar b, const char* op) {
    if (a.tag != b.tag)
        throw std::invalid_argument(std::string(op) + ": semifield tag mismatch");
}

} // namespace

double zero_of(Semifield tag) {
    return tag == Semifield::max_plus ? -std::numeric_limits<double>::infinity() : 0.0;
}

double one_of(Semifield tag) {
    return tag == Semifield::max_plus ? 0.0 : 1.0;
}

std::string to_string(Semifield tag) {
    return tag == Semifield::max_plus ? "max-plus" : "max-algebra";
}

TropScalar trop(double value, Semifield tag) {
    if (std::isnan(value))
        throw std::invalid_argument("trop: NaN is not a semifield element");
    if (tag == Semifield::max_times && value < 0.0)
        throw std::invalid_argument("trop: negative value outside the max-times carrier");
    if (value == std::numeric_limits<double>::infinity())
        throw std::invalid_argument("trop: +inf is outside the carrier");
    return TropScalar{value, tag};
}

TropScalar trop_zero(Semifield tag) { return TropScalar{zero_of(tag), tag}; }
TropScalar trop_one(Semifield tag) { return TropScalar{one_of(tag), tag}; }

bool is_zero(TropScalar a) { return a.value == zero_of(a.tag); }
bool is_one(TropScalar a) { return a.value == one_of(a.tag); }

TropScalar oplus(TropScalar a, TropScalar b) {
    require_same_tag(a, b, "oplus");
    return TropScalar{a.value >= b.value ? a.value : b.value, a.tag};
}

TropScalar otimes(TropScalar a, TropScalar b) {
    require_same_tag(a, b, "otimes");
    if (a.tag == Semifield::max_plus) {
        // -inf is absorbing; finite+finite is ordinary addition.
        if (is_zero(a) || is_zero(b)) return trop_zero(a.tag);
        return TropScalar{a.value + b.value, a.tag};
    }
    return TropScalar{a.value * b.value, a.tag};
}

TropScalar inv(TropScalar a) {
    if (is_zero(a))
        throw std::domain_error("inv: the semifield zero has no inverse");
    if (a.tag == Semifield::max_plus) return TropScalar{-a.value, a.tag};
    return TropScalar{1.0 / a.value, a.tag};
}

TropScalar tpow(TropScalar a, double r) {
    if (std::isnan(r))
        throw std::invalid_argument("tpow: NaN exponent");
    if (is_zero(a)) {
        if (r > 0.0) return trop_zero(a.tag);
        throw std::domain_error("tpow: zero to a nonpositive power");
    }
    if (a.tag == Semifield::max_plus) return TropScalar{r * a.value, a.tag};
    return TropScalar{std::pow(a.value, r), a.tag};
}

TropScalar tmin(TropScalar a, TropScalar b) {
    require_same_tag(a, b, "tmin");
    // min under the natural order; covers the zero case of the dual
    // definition since zero is the least element in both carriers.
    return TropScalar{a.value <= b.value ? a.value : b.value, a.tag};
}

TropScalar to_maxplus(TropScalar a) {
    if (a.tag != Semifield::max_times)
        throw std::invalid_argument("to_maxplus: operand must be a max-times scalar");
    return TropScalar{std::log(a.value), Semifield::max_plus};
}

TropScalar to_maxtimes(TropScalar a) {
    if (a.tag != Semifield::max_plus)
        throw std::invalid_argument("to_maxtimes: operand must be a max-plus scalar");
    return TropScalar{std::exp(a.value), Semifield::max_times};
}

} // namespace tropfit
