#include "tropfit/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace tropfit {

namespace {

void check_entries(const std::vector<double>& entries, Semifield tag, const char* what) {
    for (double v : entries)
        (void)trop(v, tag); // reuse the scalar carrier checks
    (void)what;
}

void require_same_tag(Semifield a, Semifield b, const char* op) {
    if (a != b) throw std::invalid_argument(std::string(op) + ": semifield tag mismatch");
}

// otimes on raw carrier values (zero absorbing in max-plus handled by IEEE
// -inf arithmetic: -inf + finite = -inf).
inline double raw_otimes(double a, double b, Semifield tag) {
    return tag == Semifield::max_plus ? a + b : a * b;
}

inline double raw_inv(double a, Semifield tag) {
    return tag == Semifield::max_plus ? -a : 1.0 / a;
}

} // namespace

TropVector make_vector(std::vector<double> entries, Semifield tag) {
    check_entries(entries, tag, "make_vector");
    return TropVector{tag, std::move(entries)};
}

TropMatrix make_matrix(std::size_t rows, std::size_t cols, std::vector<double> entries,
                       Semifield tag) {
    if (entries.size() != rows * cols)
        throw std::invalid_argument("make_matrix: entry count does not match shape");
    check_entries(entries, tag, "make_matrix");
    return TropMatrix{tag, rows, cols, std::move(entries)};
}

bool is_regular(const TropVector& v) {
    const double zero = zero_of(v.tag);
    for (double e : v.entries)
        if (e == zero) return false;
    return !v.entries.empty();
}

bool is_row_regular(const TropMatrix& a) {
    const double zero = zero_of(a.tag);
    for (std::size_t i = 0; i < a.rows; ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < a.cols; ++j)
            if (a.at(i, j) != zero) { nonzero = true; break; }
        if (!nonzero) return false;
    }
    return a.rows > 0 && a.cols > 0;
}

bool is_col_regular(const TropMatrix& a) {
    const double zero = zero_of(a.tag);
    for (std::size_t j = 0; j < a.cols; ++j) {
        bool nonzero = false;
        for (std::size_t i = 0; i < a.rows; ++i)
            if (a.at(i, j) != zero) { nonzero = true; break; }
        if (!nonzero) return false;
    }
    return a.rows > 0 && a.cols > 0;
}

bool is_regular(const TropMatrix& a) { return is_row_regular(a) && is_col_regular(a); }

TropVector matvec(const TropMatrix& a, const TropVector& x) {
    require_same_tag(a.tag, x.tag, "matvec");
    if (a.cols != x.size())
        throw std::invalid_argument("matvec: dimension mismatch");
    const double zero = zero_of(a.tag);
    TropVector y{a.tag, std::vector<double>(a.rows, zero)};
    for (std::size_t i = 0; i < a.rows; ++i) {
        double acc = zero;
        for (std::size_t k = 0; k < a.cols; ++k) {
            const double term = raw_otimes(a.at(i, k), x.entries[k], a.tag);
            if (term > acc) acc = term;
        }
        y.entries[i] = acc;
    }
    return y;
}

TropVector conjugate(const TropVector& x) {
    const double zero = zero_of(x.tag);
    bool any_nonzero = false;
    TropVector y{x.tag, std::vector<double>(x.size(), zero)};
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x.entries[i] != zero) {
            y.entries[i] = raw_inv(x.entries[i], x.tag);
            any_nonzero = true;
        }
    }
    if (!any_nonzero)
        throw std::domain_error("conjugate: zero vector has no conjugate");
    return y;
}

TropDistance distance(const TropVector& x, const TropVector& y) {
    require_same_tag(x.tag, y.tag, "distance");
    if (x.size() != y.size())
        throw std::invalid_argument("distance: length mismatch");
    const double zero = zero_of(x.tag);

    bool all_zero = true;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const bool zx = x.entries[i] == zero;
        const bool zy = y.entries[i] == zero;
        if (zx != zy) return TropDistance{true, trop_zero(x.tag)};
        if (!zx) all_zero = false;
    }
    if (all_zero) return TropDistance{false, trop_one(x.tag)};

    double acc = one_of(x.tag); // d >= identity on the common support
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x.entries[i] == zero) continue;
        const double a = x.entries[i], b = y.entries[i];
        const double span = x.tag == Semifield::max_plus ? std::max(a - b, b - a)
                                                         : std::max(a / b, b / a);
        if (span > acc) acc = span;
    }
    return TropDistance{false, TropScalar{acc, x.tag}};
}

namespace {

// (b^- A)^- as raw carrier values; regularity of A guarantees every entry of
// b^- A is nonzero.
std::vector<double> theta_direction(const TropMatrix& a, const TropVector& b) {
    const double zero = zero_of(a.tag);
    std::vector<double> c(a.cols);
    for (std::size_t k = 0; k < a.cols; ++k) {
        double acc = zero;
        for (std::size_t i = 0; i < a.rows; ++i) {
            if (a.at(i, k) == zero) continue;
            const double term = raw_otimes(raw_inv(b.entries[i], a.tag), a.at(i, k), a.tag);
            if (term > acc) acc = term;
        }
        c[k] = raw_inv(acc, a.tag);
    }
    return c;
}

void require_solver_input(const TropMatrix& a, const TropVector& b, const char* op) {
    if (a.rows != b.size())
        throw std::invalid_argument(std::string(op) + ": dimension mismatch");
    if (!is_regular(a))
        throw std::domain_error(std::string(op) + ": matrix must be regular");
    if (!is_regular(b))
        throw std::domain_error(std::string(op) + ": right-hand side must be regular");
}

} // namespace

TropScalar residual_delta(const TropMatrix& a, const TropVector& b) {
    require_same_tag(a.tag, b.tag, "residual_delta");
    require_solver_input(a, b, "residual_delta");
    const double zero = zero_of(a.tag);

    const std::vector<double> c = theta_direction(a, b); // (b^- A)^-
    double delta = zero;
    for (std::size_t i = 0; i < a.rows; ++i) {
        double v = zero; // (A (b^- A)^-)_i
        for (std::size_t k = 0; k < a.cols; ++k) {
            const double term = raw_otimes(a.at(i, k), c[k], a.tag);
            if (term > v) v = term;
        }
        const double row = raw_otimes(raw_inv(v, a.tag), b.entries[i], a.tag);
        if (row > delta) delta = row;
    }
    return TropScalar{delta, a.tag};
}

BestApproxResult best_approx_solve(const TropMatrix& a, const TropVector& b) {
    require_same_tag(a.tag, b.tag, "best_approx_solve");
    require_solver_input(a, b, "best_approx_solve");

    const TropScalar delta = residual_delta(a, b);
    const TropScalar err = tpow(delta, 0.5);
    const std::vector<double> c = theta_direction(a, b);

    TropVector x{a.tag, std::vector<double>(a.cols)};
    for (std::size_t k = 0; k < a.cols; ++k)
        x.entries[k] = raw_otimes(err.value, c[k], a.tag);

    const bool exact = std::abs(delta.value - one_of(a.tag)) <= 1e-12;
    return BestApproxResult{delta, err, std::move(x), exact};
}

} // namespace tropfit
