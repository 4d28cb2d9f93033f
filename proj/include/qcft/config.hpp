#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>

namespace qcft {

struct RunConfig {
    std::size_t order = 201;
    double float_tolerance = 1e-8;
    bool exact_only = false;
    std::optional<std::string> output_path;

    // order >= 8, tolerance in (0, 1e-2]; throws ConfigParse.
    void validate() const;
};

// Line-based "key = value" text; '#' starts a comment. Keys: order,
// float_tolerance, exact_only, output_path. Values override `base`.
RunConfig parse_config(const std::string &text, RunConfig base = {});
RunConfig load_config(const std::filesystem::path &path, RunConfig base = {});

// Defaults, then QCFT_ORDER from the environment (if set).
RunConfig config_from_environment();

} // namespace qcft
