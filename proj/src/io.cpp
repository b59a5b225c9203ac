#include "tropfit/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace tropfit {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

bool parse_double(const std::string& field, double& out) {
    const std::string t = trim(field);
    if (t.empty()) return false;
    const char* begin = t.data();
    const char* end = begin + t.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

} // namespace

Dataset read_dataset(std::istream& in, const std::string& origin) {
    Dataset data;
    std::string line;
    std::size_t lineno = 0;
    bool width_known = false;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const std::vector<std::string> fields = split_csv(t);
        if (fields.size() > 2)
            throw IoError(origin + ":" + std::to_string(lineno) + ": expected at most two columns");

        double x = 0.0, y = 0.0;
        if (!parse_double(fields[0], x)) {
            // A single non-numeric row before any data is the header.
            if (data.xs.empty() && !width_known) continue;
            throw IoError(origin + ":" + std::to_string(lineno) + ": malformed number");
        }
        const bool row_has_y = fields.size() == 2;
        if (row_has_y && !parse_double(fields[1], y))
            throw IoError(origin + ":" + std::to_string(lineno) + ": malformed number");
        if (!width_known) {
            data.has_y = row_has_y;
            width_known = true;
        } else if (row_has_y != data.has_y) {
            throw IoError(origin + ":" + std::to_string(lineno) + ": inconsistent column count");
        }
        data.xs.push_back(x);
        if (row_has_y) data.ys.push_back(y);
    }
    if (data.xs.empty())
        throw IoError(origin + ": no data rows");
    return data;
}

Dataset read_dataset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError(path + ": cannot open");
    return read_dataset(in, path);
}

void write_dataset(std::ostream& out, const Dataset& data) {
    out << std::setprecision(17);
    out << (data.has_y ? "x,y\n" : "x\n");
    for (std::size_t i = 0; i < data.xs.size(); ++i) {
        out << data.xs[i];
        if (data.has_y) out << ',' << data.ys[i];
        out << '\n';
    }
}

Dataset demo_dataset() {
    Dataset data;
    data.has_y = true;
    for (int i = 0; i < 21; ++i) {
        const double x = 1.0 + i / 10.0;
        data.xs.push_back(x);
        data.ys.push_back((x - 0.75) * (x - 0.75) - 3.0 * std::sqrt(x - 1.0) + 2.0);
    }
    return data;
}

namespace {

json interval_to_json(const std::array<std::optional<double>, 2>& iv) {
    json j = json::array();
    j.push_back(iv[0] ? json(*iv[0]) : json(nullptr));
    j.push_back(iv[1] ? json(*iv[1]) : json(nullptr));
    return j;
}

} // namespace

std::string fit_result_to_json(const FitResult& result) {
    json j;
    j["algebra"] = to_string(result.algebra);
    j["n_terms"] = result.n_terms;
    j["delta_star"] = result.delta_star;
    j["error"] = result.error;
    j["exponents"] = result.exponents;
    j["coefficients"] = result.coefficients;
    j["partition"] = result.partition;
    j["residuals"] = result.residuals;
    json intervals = json::array();
    for (const auto& iv : result.intervals) intervals.push_back(interval_to_json(iv));
    j["intervals"] = intervals;
    return j.dump(2) + "\n";
}

FitResult fit_result_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw IoError(std::string("fit JSON: ") + e.what());
    }
    try {
        FitResult r;
        r.algebra = parse_algebra(j.at("algebra").get<std::string>());
        r.n_terms = j.at("n_terms").get<int>();
        r.delta_star = j.at("delta_star").get<double>();
        r.error = j.at("error").get<double>();
        r.exponents = j.at("exponents").get<std::vector<double>>();
        r.coefficients = j.at("coefficients").get<std::vector<double>>();
        r.partition = j.at("partition").get<std::vector<std::vector<int>>>();
        r.residuals = j.at("residuals").get<std::vector<double>>();
        for (const json& iv : j.at("intervals")) {
            std::array<std::optional<double>, 2> bounds;
            if (!iv.at(0).is_null()) bounds[0] = iv.at(0).get<double>();
            if (!iv.at(1).is_null()) bounds[1] = iv.at(1).get<double>();
            r.intervals.push_back(bounds);
        }
        if (r.exponents.size() != r.coefficients.size())
            throw IoError("fit JSON: exponent/coefficient length mismatch");
        return r;
    } catch (const json::exception& e) {
        throw IoError(std::string("fit JSON: ") + e.what());
    }
}

std::string oracle_result_to_json(const OracleResult& result, int n_terms) {
    json j;
    j["algebra"] = to_string(result.algebra);
    j["n_terms"] = n_terms;
    j["delta_exact"] = result.delta_exact;
    j["best_partition"] = result.best_partition;
    j["evaluations"] = result.evaluations;
    return j.dump(2) + "\n";
}

std::string sweep_to_json(const std::vector<SweepEntry>& entries, Semifield algebra) {
    json rows = json::array();
    for (const SweepEntry& e : entries)
        rows.push_back({{"n_terms", e.n_terms}, {"delta_star", e.delta_star}});
    json j;
    j["algebra"] = to_string(algebra);
    j["entries"] = rows;
    return j.dump(2) + "\n";
}

std::string sweep_to_csv(const std::vector<SweepEntry>& entries) {
    std::ostringstream out;
    out << std::setprecision(17) << "n_terms,delta_star\n";
    for (const SweepEntry& e : entries)
        out << e.n_terms << ',' << e.delta_star << '\n';
    return out.str();
}

Semifield parse_algebra(const std::string& name) {
    if (name == "max-plus") return Semifield::max_plus;
    if (name == "max-algebra" || name == "max-times") return Semifield::max_times;
    throw IoError("unknown algebra '" + name + "' (expected max-plus or max-algebra)");
}

} // namespace tropfit
