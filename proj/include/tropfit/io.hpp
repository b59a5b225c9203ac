#pragma once

// File formats for the command-line surface: two-column CSV datasets
// (optional "x,y" header, '#' comments) and the JSON fit schema with the
// fixed keys algebra, n_terms, delta_star, error, exponents, coefficients,
// partition (1-based), residuals, intervals.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropfit/fitter.hpp"
#include "tropfit/oracle.hpp"

namespace tropfit {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Dataset {
    std::vector<double> xs;
    std::vector<double> ys; // empty for abscissa-only files
    bool has_y = false;
};

Dataset read_dataset(std::istream& in, const std::string& origin = "<stream>");
Dataset read_dataset_file(const std::string& path);

void write_dataset(std::ostream& out, const Dataset& data);

/// The 21-sample test problem x_i = 1 + (i-1)/10,
/// y_i = (x_i - 3/4)^2 - 3 (x_i - 1)^(1/2) + 2.
Dataset demo_dataset();

std::string fit_result_to_json(const FitResult& result);
FitResult fit_result_from_json(const std::string& text);

std::string oracle_result_to_json(const OracleResult& result, int n_terms);

std::string sweep_to_json(const std::vector<SweepEntry>& entries, Semifield algebra);
std::string sweep_to_csv(const std::vector<SweepEntry>& entries);

Semifield parse_algebra(const std::string& name); // "max-plus" | "max-algebra"

} // namespace tropfit
