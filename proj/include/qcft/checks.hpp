#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <qcft/config.hpp>
#include <qcft/report.hpp>

namespace qcft {

struct CheckOptions {
    RunConfig config;
    std::optional<std::string> series_name;   // series: eta, e2, e4, e6, G, H, chi0, chi15, oscillator, twisted
    std::optional<std::string> progressions;  // casimir / series: "5:1,4"
    std::optional<unsigned> gram_level;
    bool gram_vacuum = false;
    std::size_t mock_terms = 5;
    std::optional<long> label_p;
    std::optional<long> label_q;
};

// One entry per verified statement, in a fixed order.
std::vector<CheckReport> check_rogers_ramanujan(const CheckOptions &o);   // 1
std::vector<CheckReport> check_casimir(const CheckOptions &o);            // 2
std::vector<CheckReport> check_minimal_model(const CheckOptions &o);      // 3
std::vector<CheckReport> check_null_vector(const CheckOptions &o);        // 4
std::vector<CheckReport> check_modular_ode(const CheckOptions &o);        // 5
std::vector<CheckReport> check_torus_25(const CheckOptions &o);           // 6
std::vector<CheckReport> check_andrews_gordon(const CheckOptions &o);     // 7
std::vector<CheckReport> check_compact_boson(const CheckOptions &o);      // 8
std::vector<CheckReport> check_determinant_ratios(const CheckOptions &o); // 9
std::vector<CheckReport> check_mock_modular(const CheckOptions &o);       // 10
std::vector<CheckReport> check_critical_dimension(const CheckOptions &o); // 11

// Subcommand-specific extras.
std::vector<CheckReport> series_report(const CheckOptions &o);
std::vector<CheckReport> casimir_query(const CheckOptions &o);
std::vector<CheckReport> gram_query(const CheckOptions &o);
std::vector<CheckReport> minimal_model_query(const CheckOptions &o);

// Criteria 1-11 in order (numeric ones skipped when exact_only).
std::vector<CheckReport> run_all_criteria(const CheckOptions &o);
// run_all_criteria twice plus a byte-identity record.
std::vector<CheckReport> run_all(const CheckOptions &o);

inline constexpr std::string_view subcommands[]
    = {"series", "casimir", "rr", "minimal-model", "gram", "ode", "boson", "lattice-det", "mock", "all"};

// Throws std::invalid_argument on an unknown subcommand.
std::vector<CheckReport> run_subcommand(std::string_view name, const CheckOptions &o);

} // namespace qcft
