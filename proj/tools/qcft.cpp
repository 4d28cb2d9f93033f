// qcft: run the q-series / CFT verification checks and emit JSON reports.
//
// Exit codes: 0 all checks pass, 1 a check (or golden comparison) failed,
// 2 usage or configuration error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <qcft/checks.hpp>
#include <qcft/config.hpp>
#include <qcft/errors.hpp>
#include <qcft/report.hpp>

namespace {

constexpr int exit_usage = 2;
constexpr int exit_failure = 1;

struct Flags {
    std::optional<std::size_t> order;
    std::optional<double> tolerance;
    std::optional<std::string> config_path;
    std::optional<std::string> output_path;
    std::optional<std::string> golden_path;
    bool update_golden = false;
    bool exact_only = false;
};

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact q-series and CFT verification checks"};
    app.require_subcommand(1);
    app.fallthrough();

    Flags flags;
    qcft::CheckOptions options;
    app.add_option("--order", flags.order, "Series truncation order (coefficients through q^{a+order-1})");
    app.add_option("--tolerance", flags.tolerance, "Tolerance for numeric fields in golden comparisons");
    app.add_option("--config", flags.config_path, "key = value configuration file");
    app.add_option("--output", flags.output_path, "Also write the report array to this path");
    app.add_option("--golden", flags.golden_path, "Compare against this golden file (written if absent)");
    app.add_flag("--update-golden", flags.update_golden, "Overwrite the golden file instead of comparing");
    app.add_flag("--exact-only", flags.exact_only, "Skip floating-point checks");

    auto *series = app.add_subcommand("series", "Emit a named series and basic series identities");
    series->add_option("--name", options.series_name, "eta, e2, e4, e6, G, H, chi0, chi15, oscillator, twisted");
    series->add_option("--progressions", options.progressions, "Spectrum for oscillator/twisted, e.g. 5:1,4");

    auto *casimir = app.add_subcommand("casimir", "Regularized sums, Casimir exponents, critical dimension");
    casimir->add_option("--progressions", options.progressions, "Spectrum p:r1,r2,... (groups separated by ';')");

    app.add_subcommand("rr", "Rogers-Ramanujan sum = product and Andrews-Gordon checks");

    auto *minimal = app.add_subcommand("minimal-model", "Minimal-model constants and (2,5) torus invariance");
    minimal->add_option("--p", options.label_p, "Label p (with --q: report c and c_eff only)");
    minimal->add_option("--q", options.label_q, "Label q");

    auto *gram = app.add_subcommand("gram", "Virasoro Gram matrices and the level-4 null vector");
    gram->add_option("--level", options.gram_level, "Emit the Gram matrix at this level (1..6)");
    gram->add_flag("--vacuum", options.gram_vacuum, "Use the vacuum module (parts >= 2)");

    app.add_subcommand("ode", "Second-order modular ODE for the (2,5) characters");
    app.add_subcommand("boson", "Compact boson duality and modular invariance");
    app.add_subcommand("lattice-det", "Lattice vs continuum determinant ratios");
    auto *mock = app.add_subcommand("mock", "Mock-modular coefficients from the K3 elliptic genus");
    mock->add_option("--terms", options.mock_terms, "Number of q-coefficients to extract (>= 5)");
    app.add_subcommand("all", "Every acceptance check, run twice for determinism");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        qcft::RunConfig config = qcft::config_from_environment();
        if (flags.config_path) {
            config = qcft::load_config(*flags.config_path, config);
        }
        if (flags.order) {
            config.order = *flags.order;
        }
        if (flags.tolerance) {
            config.float_tolerance = *flags.tolerance;
        }
        if (flags.output_path) {
            config.output_path = flags.output_path;
        }
        config.exact_only = config.exact_only || flags.exact_only;
        config.validate();
        options.config = config;
        if (options.label_p.has_value() != options.label_q.has_value()) {
            throw std::invalid_argument("--p and --q must be given together");
        }

        const auto *chosen = app.get_subcommands().front();
        const auto reports = qcft::run_subcommand(chosen->get_name(), options);
        const std::string text = qcft::serialize_reports(reports);
        std::cout << text;
        if (config.output_path) {
            std::ofstream out(*config.output_path, std::ios::binary | std::ios::trunc);
            if (!out) {
                std::cerr << "error: cannot write " << *config.output_path << "\n";
                return exit_usage;
            }
            out << text;
        }

        bool ok = qcft::all_pass(reports);
        if (flags.golden_path) {
            const std::filesystem::path golden(*flags.golden_path);
            if (flags.update_golden || !std::filesystem::exists(golden)) {
                qcft::write_golden(reports, golden);
            } else {
                try {
                    qcft::compare_golden(reports, golden, config.float_tolerance);
                } catch (const qcft::GoldenMismatch &e) {
                    std::cerr << e.what() << "\n";
                    ok = false;
                }
            }
        }
        for (const auto &r : reports) {
            if (!r.pass) {
                std::cerr << "FAIL " << r.name << " " << r.params.dump() << " residual=" << r.residual << "\n";
            }
        }
        return ok ? 0 : exit_failure;
    } catch (const qcft::ConfigParse &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const qcft::InvalidLabel &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const qcft::InvalidProgression &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const qcft::LevelTooLarge &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const qcft::ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const qcft::Error &e) {
        // A computation refused to produce a trustworthy answer.
        std::cerr << "error: " << e.what() << "\n";
        return exit_failure;
    }
}
