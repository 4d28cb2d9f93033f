#include <qcft/report.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

#include <qcft/errors.hpp>
#include <qcft/numeric.hpp>

namespace qcft {

CheckReport exact_check(std::string name, Json params, const Rational &lhs, const Rational &rhs)
{
    CheckReport r;
    r.name = std::move(name);
    r.params = std::move(params);
    r.lhs = lhs.to_string();
    r.rhs = rhs.to_string();
    r.residual = (lhs - rhs).to_string();
    r.pass = lhs == rhs;
    return r;
}

CheckReport exact_statement(std::string name, Json params, bool holds)
{
    CheckReport r;
    r.name = std::move(name);
    r.params = std::move(params);
    r.residual = holds ? "0/1" : "1/1";
    r.pass = holds;
    return r;
}

CheckReport numeric_check(std::string name, Json params, double lhs, double rhs, double residual, double tolerance)
{
    CheckReport r;
    r.name = std::move(name);
    r.params = std::move(params);
    r.lhs = format_decimal(lhs);
    r.rhs = format_decimal(rhs);
    r.residual = format_decimal(residual);
    r.tolerance = format_short(tolerance);
    r.pass = std::abs(residual) < tolerance;
    return r;
}

Json to_json(const CheckReport &r)
{
    Json j;
    j["name"] = r.name;
    j["params"] = r.params;
    if (r.lhs) {
        j["lhs"] = *r.lhs;
    }
    if (r.rhs) {
        j["rhs"] = *r.rhs;
    }
    j["residual"] = r.residual;
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass;
    if (!r.details.is_null()) {
        j["details"] = r.details;
    }
    return j;
}

CheckReport report_from_json(const Json &j)
{
    try {
        CheckReport r;
        r.name = j.at("name").get<std::string>();
        r.params = j.at("params");
        if (j.contains("lhs")) {
            r.lhs = j.at("lhs").get<std::string>();
        }
        if (j.contains("rhs")) {
            r.rhs = j.at("rhs").get<std::string>();
        }
        r.residual = j.at("residual").get<std::string>();
        r.tolerance = j.at("tolerance").get<std::string>();
        r.pass = j.at("pass").get<bool>();
        if (j.contains("details")) {
            r.details = j.at("details");
        }
        return r;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("check report: ") + e.what());
    }
}

Json to_json(const std::vector<CheckReport> &reports)
{
    Json out = Json::array();
    for (const auto &r : reports) {
        out.push_back(to_json(r));
    }
    return out;
}

std::string serialize_reports(const std::vector<CheckReport> &reports)
{
    return dump_stable(to_json(reports));
}

bool all_pass(const std::vector<CheckReport> &reports)
{
    for (const auto &r : reports) {
        if (!r.pass) {
            return false;
        }
    }
    return true;
}

void write_golden(const std::vector<CheckReport> &reports, const std::filesystem::path &path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write golden file " + path.string());
    }
    out << serialize_reports(reports);
}

namespace {

// Decimal strings (not "p/q" rationals) parse as doubles.
std::optional<double> as_decimal(const Json &j)
{
    if (!j.is_string()) {
        return std::nullopt;
    }
    const auto &s = j.get_ref<const std::string &>();
    if (s.empty() || s.find('/') != std::string::npos) {
        return std::nullopt;
    }
    std::size_t used = 0;
    try {
        const double v = std::stod(s, &used);
        if (used == s.size()) {
            return v;
        }
    } catch (const std::exception &) {
    }
    return std::nullopt;
}

bool equivalent(const Json &a, const Json &b, double tolerance, bool numeric)
{
    if (numeric) {
        const auto da = as_decimal(a);
        const auto db = as_decimal(b);
        if (da && db) {
            const double scale = std::max({1.0, std::abs(*da), std::abs(*db)});
            return std::abs(*da - *db) <= tolerance * scale;
        }
    }
    if (a.is_number() && b.is_number()) {
        return a == b;  // a parsed 5 is unsigned, a constructed 5 signed
    }
    if (a.type() != b.type()) {
        return false;
    }
    if (a.is_object()) {
        if (a.size() != b.size()) {
            return false;
        }
        for (auto it = a.begin(); it != a.end(); ++it) {
            if (!b.contains(it.key()) || !equivalent(it.value(), b.at(it.key()), tolerance, numeric)) {
                return false;
            }
        }
        return true;
    }
    if (a.is_array()) {
        if (a.size() != b.size()) {
            return false;
        }
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!equivalent(a[i], b[i], tolerance, numeric)) {
                return false;
            }
        }
        return true;
    }
    return a == b;
}

} // namespace

std::optional<std::string> golden_difference(const std::vector<CheckReport> &reports, const Json &golden,
                                             double tolerance)
{
    if (!golden.is_array()) {
        return "golden file is not a report array";
    }
    const std::size_t common = std::min(reports.size(), golden.size());
    for (std::size_t i = 0; i < common; ++i) {
        const Json current = to_json(reports[i]);
        const Json &expected = golden[i];
        const bool numeric = expected.value("tolerance", std::string("0")) != "0";
        if (!equivalent(current, expected, tolerance, numeric)) {
            return "record " + std::to_string(i) + " ('" + reports[i].name + "') differs: expected "
                   + expected.dump() + ", got " + current.dump();
        }
    }
    if (reports.size() != golden.size()) {
        return "record count differs: expected " + std::to_string(golden.size()) + ", got "
               + std::to_string(reports.size());
    }
    return std::nullopt;
}

bool compare_golden(const std::vector<CheckReport> &reports, const std::filesystem::path &path, double tolerance)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read golden file " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    Json golden;
    try {
        golden = Json::parse(buffer.str());
    } catch (const nlohmann::json::exception &e) {
        throw GoldenMismatch(path.string() + " is not valid JSON: " + e.what());
    }
    if (const auto diff = golden_difference(reports, golden, tolerance)) {
        throw GoldenMismatch(*diff);
    }
    return true;
}

} // namespace qcft
