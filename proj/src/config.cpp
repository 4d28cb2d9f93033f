#include <qcft/config.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <qcft/errors.hpp>

namespace qcft {

void RunConfig::validate() const
{
    if (order < 8) {
        throw ConfigParse("order must be at least 8, got " + std::to_string(order));
    }
    if (!(float_tolerance > 0.0 && float_tolerance <= 1e-2)) {
        throw ConfigParse("float_tolerance must lie in (0, 1e-2]");
    }
}

namespace {

std::string trim(const std::string &s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::size_t parse_order(const std::string &value)
{
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(value, &used);
    } catch (const std::exception &) {
        throw ConfigParse("order '" + value + "' is not an integer");
    }
    if (used != value.size() || v < 8) {
        throw ConfigParse("order must be an integer >= 8, got '" + value + "'");
    }
    return static_cast<std::size_t>(v);
}

double parse_tolerance(const std::string &value)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &used);
    } catch (const std::exception &) {
        throw ConfigParse("float_tolerance '" + value + "' is not a number");
    }
    if (used != value.size()) {
        throw ConfigParse("float_tolerance '" + value + "' is not a number");
    }
    return v;
}

bool parse_bool(const std::string &value)
{
    if (value == "true" || value == "1" || value == "yes") {
        return true;
    }
    if (value == "false" || value == "0" || value == "no") {
        return false;
    }
    throw ConfigParse("expected a boolean, got '" + value + "'");
}

} // namespace

RunConfig parse_config(const std::string &text, RunConfig base)
{
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        const std::string where = "line " + std::to_string(line_no) + ": ";
        if (eq == std::string::npos) {
            throw ConfigParse(where + "expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "order") {
                base.order = parse_order(value);
            } else if (key == "float_tolerance") {
                base.float_tolerance = parse_tolerance(value);
            } else if (key == "exact_only") {
                base.exact_only = parse_bool(value);
            } else if (key == "output_path") {
                base.output_path = value;
            } else {
                throw ConfigParse("unknown key '" + key + "'");
            }
            base.validate();
        } catch (const ConfigParse &e) {
            const std::string message = e.what();
            throw ConfigParse(where + message.substr(message.find(": ") + 2));
        }
    }
    return base;
}

RunConfig load_config(const std::filesystem::path &path, RunConfig base)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigParse("cannot open " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str(), std::move(base));
}

RunConfig config_from_environment()
{
    RunConfig config;
    if (const char *env = std::getenv("QCFT_ORDER"); env != nullptr && *env != '\0') {
        try {
            config.order = parse_order(env);
        } catch (const ConfigParse &e) {
            const std::string message = e.what();
            throw ConfigParse("QCFT_ORDER: " + message.substr(message.find(": ") + 2));
        }
    }
    return config;
}

} // namespace qcft
