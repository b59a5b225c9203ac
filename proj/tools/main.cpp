// tropfit: fit generalized tropical Puiseux polynomials to sampled data.
//
// Subcommands: demo, fit, sweep, eval, oracle. Exit codes: 0 success,
// 1 malformed input, 2 domain error, 3 oracle size-guard refusal.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tropfit/fitter.hpp"
#include "tropfit/io.hpp"
#include "tropfit/oracle.hpp"

namespace {

using namespace tropfit;

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw IoError(path + ": cannot open for writing");
    out << text;
}

SampleSet load_samples(const std::string& path, Semifield tag) {
    const Dataset data = read_dataset_file(path);
    if (!data.has_y)
        throw IoError(path + ": need two columns (x,y)");
    return make_samples(data.xs, data.ys, tag);
}

std::pair<int, int> parse_terms_range(const std::string& spec) {
    const std::size_t pos = spec.find("..");
    try {
        if (pos == std::string::npos) {
            const int n = std::stoi(spec);
            return {n, n};
        }
        return {std::stoi(spec.substr(0, pos)), std::stoi(spec.substr(pos + 2))};
    } catch (const std::exception&) {
        throw IoError("--terms: expected N or MIN..MAX, got '" + spec + "'");
    }
}

std::string curve_csv(const FitResult& result, const SampleSet& samples, int curve_samples,
                      double lo, double hi) {
    std::ostringstream out;
    out << std::setprecision(17) << "x,p_star,y_sample\n";
    for (int k = 0; k < curve_samples; ++k) {
        const double t = curve_samples == 1 ? 0.0 : static_cast<double>(k) / (curve_samples - 1);
        const double x = lo + t * (hi - lo);
        out << x << ',' << predict(result, x) << ",\n";
    }
    for (std::size_t i = 0; i < samples.size(); ++i)
        out << samples.xs[i] << ',' << predict(result, samples.xs[i]) << ',' << samples.ys[i]
            << '\n';
    return out.str();
}

struct Options {
    std::string input;
    std::string output;
    std::string model;
    std::string algebra = "max-plus";
    std::string terms = "1";
    std::string curve;
    std::string csv;
    std::string exec = "parallel";
    int curve_samples = 400;
    std::vector<double> curve_range;
};

Exec parse_exec(const std::string& name) {
    return name == "serial" ? Exec::serial : Exec::parallel;
}

int run_demo(const Options& opt) {
    std::ostringstream out;
    out << "# f(x) = (x - 3/4)^2 - 3 (x - 1)^(1/2) + 2 on [1,3], M = 21\n";
    std::ostringstream body;
    write_dataset(body, demo_dataset());
    write_text(opt.output, out.str() + body.str());
    return 0;
}

int run_fit(const Options& opt) {
    const Semifield tag = parse_algebra(opt.algebra);
    const SampleSet samples = load_samples(opt.input, tag);
    FitConfig config;
    config.tag = tag;
    config.n_terms = parse_terms_range(opt.terms).first;
    config.exec = parse_exec(opt.exec);
    const FitResult result =
        tag == Semifield::max_plus ? fit(samples, config) : fit_maxalgebra(samples, config);
    write_text(opt.output, fit_result_to_json(result));
    if (!opt.curve.empty()) {
        double lo = samples.xs.front(), hi = samples.xs.front();
        for (double x : samples.xs) {
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
        if (opt.curve_range.size() == 2) {
            lo = opt.curve_range[0];
            hi = opt.curve_range[1];
            if (!(lo < hi)) throw IoError("--curve-range: expected MIN < MAX");
        }
        write_text(opt.curve, curve_csv(result, samples, opt.curve_samples, lo, hi));
    }
    return 0;
}

int run_sweep(const Options& opt) {
    const Semifield tag = parse_algebra(opt.algebra);
    const SampleSet samples = load_samples(opt.input, tag);
    const auto [n_min, n_max] = parse_terms_range(opt.terms);
    const std::vector<SweepEntry> entries = sweep(samples, n_min, n_max, parse_exec(opt.exec));
    write_text(opt.output, sweep_to_json(entries, tag));
    if (!opt.csv.empty())
        write_text(opt.csv, sweep_to_csv(entries));
    return 0;
}

int run_eval(const Options& opt) {
    std::ifstream in(opt.model);
    if (!in)
        throw IoError(opt.model + ": cannot open");
    std::ostringstream buf;
    buf << in.rdbuf();
    const FitResult model = fit_result_from_json(buf.str());

    const Dataset points = read_dataset_file(opt.input);
    std::vector<double> predictions;
    predictions.reserve(points.xs.size());
    for (double x : points.xs) predictions.push_back(predict(model, x));

    nlohmann::json j;
    j["algebra"] = to_string(model.algebra);
    j["x"] = points.xs;
    j["predictions"] = predictions;
    if (points.has_y) {
        std::vector<double> residuals;
        residuals.reserve(points.xs.size());
        for (std::size_t i = 0; i < points.xs.size(); ++i) {
            const double p = predictions[i], y = points.ys[i];
            residuals.push_back(model.algebra == Semifield::max_plus
                                    ? std::abs(p - y)
                                    : std::max(p / y, y / p));
        }
        j["residuals"] = residuals;
    }
    write_text(opt.output, j.dump(2) + "\n");
    return 0;
}

int run_oracle(const Options& opt) {
    const Semifield tag = parse_algebra(opt.algebra);
    const SampleSet samples = load_samples(opt.input, tag);
    const int n = parse_terms_range(opt.terms).first;
    const OracleResult result = exact_fit(samples, n, parse_exec(opt.exec));
    write_text(opt.output, oracle_result_to_json(result, n));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tropical Puiseux polynomial fitting (max-plus / max-algebra)"};
    app.require_subcommand(1);

    Options opt;
    const auto add_common = [&](CLI::App* sub, bool needs_input) {
        if (needs_input)
            sub->add_option("-i,--input", opt.input, "input CSV (x,y per row, '#' comments)")
                ->required();
        sub->add_option("-o,--output", opt.output, "output path (default stdout)");
    };
    const auto add_algebra = [&](CLI::App* sub) {
        sub->add_option("-a,--algebra", opt.algebra, "max-plus or max-algebra")
            ->check(CLI::IsMember({"max-plus", "max-algebra"}));
    };
    const auto add_exec = [&](CLI::App* sub) {
        sub->add_option("--exec", opt.exec, "kernel execution policy")
            ->check(CLI::IsMember({"serial", "parallel"}));
    };

    CLI::App* demo = app.add_subcommand("demo", "emit the bundled 21-sample test dataset");
    add_common(demo, false);

    CLI::App* fit_cmd = app.add_subcommand("fit", "fit an N-term polynomial, emit JSON");
    add_common(fit_cmd, true);
    add_algebra(fit_cmd);
    add_exec(fit_cmd);
    fit_cmd->add_option("-n,--terms", opt.terms, "number of monomials")->required();
    fit_cmd->add_option("--curve", opt.curve, "also write plot rows (x,p_star,y_sample)");
    fit_cmd->add_option("--curve-samples", opt.curve_samples, "curve point count")
        ->check(CLI::PositiveNumber);
    fit_cmd->add_option("--curve-range", opt.curve_range, "curve range MIN MAX")
        ->expected(2);

    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "delta_star for a range of term counts, emit JSON/CSV");
    add_common(sweep_cmd, true);
    add_algebra(sweep_cmd);
    add_exec(sweep_cmd);
    sweep_cmd->add_option("-n,--terms", opt.terms, "term-count range MIN..MAX")->required();
    sweep_cmd->add_option("--csv", opt.csv, "also write the table as CSV");

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a fit JSON at abscissas");
    add_common(eval_cmd, true);
    eval_cmd->add_option("-m,--model", opt.model, "fit JSON produced by the fit subcommand")
        ->required();

    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "exhaustive partition search (small instances)");
    add_common(oracle_cmd, true);
    add_algebra(oracle_cmd);
    add_exec(oracle_cmd);
    oracle_cmd->add_option("-n,--terms", opt.terms, "number of parts")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (demo->parsed()) return run_demo(opt);
        if (fit_cmd->parsed()) return run_fit(opt);
        if (sweep_cmd->parsed()) return run_sweep(opt);
        if (eval_cmd->parsed()) return run_eval(opt);
        if (oracle_cmd->parsed()) return run_oracle(opt);
    } catch (const OracleSizeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
