#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <qcft/serialize.hpp>

namespace qcft {

// One verified statement. `tolerance` is "0" for exact checks, whose
// residual must then be "0/1"; numeric checks carry a decimal tolerance.
struct CheckReport {
    std::string name;
    Json params = Json::object();
    std::optional<std::string> lhs;
    std::optional<std::string> rhs;
    std::string residual;
    std::string tolerance = "0";
    bool pass = false;
    Json details;  // null when absent

    bool exact() const { return tolerance == "0"; }
};

// Exact check: passes iff lhs == rhs.
CheckReport exact_check(std::string name, Json params, const Rational &lhs, const Rational &rhs);
// Exact boolean statement with residual "0/1" on success, "1/1" on failure.
CheckReport exact_statement(std::string name, Json params, bool holds);
// Numeric check: passes iff |residual| < tolerance (strict).
CheckReport numeric_check(std::string name, Json params, double lhs, double rhs, double residual, double tolerance);

Json to_json(const CheckReport &r);
CheckReport report_from_json(const Json &j);
Json to_json(const std::vector<CheckReport> &reports);
std::string serialize_reports(const std::vector<CheckReport> &reports);

bool all_pass(const std::vector<CheckReport> &reports);

void write_golden(const std::vector<CheckReport> &reports, const std::filesystem::path &path);
// First difference between `reports` and a golden array, if any. Exact
// records compare byte-for-byte; in numeric records decimal strings compare
// within `tolerance` (relative to max(1, |a|, |b|)).
std::optional<std::string> golden_difference(const std::vector<CheckReport> &reports, const Json &golden,
                                             double tolerance);
// Returns true on a match and throws GoldenMismatch otherwise.
bool compare_golden(const std::vector<CheckReport> &reports, const std::filesystem::path &path, double tolerance);

} // namespace qcft
