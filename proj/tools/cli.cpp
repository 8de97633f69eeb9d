#include "cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>

#include "wsncov/connectivity_rules.hpp"
#include "wsncov/coverage_model.hpp"
#include "wsncov/deployment.hpp"
#include "wsncov/error.hpp"
#include "wsncov/serialization.hpp"
#include "wsncov/svg.hpp"
#include "wsncov/verification.hpp"

namespace wsncov::cli {

namespace {

// Usage and I/O problems; mapped to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Side of the square field used for every sweep row, in lattice spacings.
constexpr double kSweepFieldSpacings = 40.0;

struct RangeSpec {
    double min = 0.0;
    double max = 0.0;
    double step = 0.0;
};

double parse_number(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw UsageError(fmt::format("malformed {} '{}'", what, text));
    }
    if (used != text.size() || !std::isfinite(value)) {
        throw UsageError(fmt::format("malformed {} '{}'", what, text));
    }
    return value;
}

// "min:max:step" with step > 0 and max >= min.
RangeSpec parse_range(const std::string& text, const std::string& what) {
    const auto first = text.find(':');
    const auto second = first == std::string::npos ? first : text.find(':', first + 1);
    if (second == std::string::npos || text.find(':', second + 1) != std::string::npos) {
        throw UsageError(fmt::format("{} must look like min:max:step, got '{}'", what, text));
    }
    RangeSpec range{parse_number(text.substr(0, first), what),
                    parse_number(text.substr(first + 1, second - first - 1), what),
                    parse_number(text.substr(second + 1), what)};
    if (!(range.step > 0.0) || range.max < range.min) {
        throw UsageError(fmt::format("{} needs step > 0 and max >= min, got '{}'", what, text));
    }
    return range;
}

std::vector<double> expand_range(const RangeSpec& range) {
    const double span = (range.max - range.min) / range.step;
    const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
    std::vector<double> values;
    values.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        double v = range.min + static_cast<double>(i) * range.step;
        if (std::abs(v - range.max) <= 1e-9 * range.step) v = range.max;
        values.push_back(v);
    }
    return values;
}

SensingField parse_field(const std::string& text) {
    const auto x = text.find_first_of("xX");
    if (x == std::string::npos) {
        throw UsageError(fmt::format("field must look like WxH, got '{}'", text));
    }
    const double width = parse_number(text.substr(0, x), "field width");
    const double height = parse_number(text.substr(x + 1), "field height");
    if (!(width > 0.0) || !(height > 0.0)) {
        throw UsageError("field dimensions must be positive");
    }
    return SensingField(width, height);
}

void require_positive(double value, const char* name) {
    if (!(value > 0.0)) {
        throw UsageError(fmt::format("{} must be positive", name));
    }
}

// Writes to stdout when path is empty; otherwise to path via a temporary
// file and a rename so a failed run leaves nothing behind.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    const std::filesystem::path target(path);
    std::filesystem::path temp = target;
    temp += ".partial";
    {
        std::ofstream file(temp, std::ios::binary | std::ios::trunc);
        if (!file) {
            throw UsageError(fmt::format("cannot write '{}'", path));
        }
        file << text;
        file.flush();
        if (!file) {
            std::error_code ignored;
            std::filesystem::remove(temp, ignored);
            throw UsageError(fmt::format("cannot write '{}'", path));
        }
    }
    std::error_code ec;
    std::filesystem::rename(temp, target, ec);
    if (ec) {
        std::filesystem::remove(temp, ec);
        throw UsageError(fmt::format("cannot write '{}'", path));
    }
}

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) {
        throw UsageError(fmt::format("cannot read deployment file '{}'", path));
    }
    try {
        return nlohmann::json::parse(file);
    } catch (const nlohmann::json::exception&) {
        throw UsageError(fmt::format("deployment file '{}' is not valid JSON", path));
    }
}

// Options shared by commands that act on an existing or synthesized deployment.
struct DeploymentSource {
    std::string file;
    std::optional<double> spacing;
    std::string field;
    double rs = 1.0;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--deployment", file, "Deployment or plan JSON file");
        cmd.add_option("--spacing", spacing, "Lattice spacing, used with --field");
        cmd.add_option("--field", field, "Field size WxH");
        cmd.add_option("--rs", rs, "Sensing radius")->capture_default_str();
    }

    Deployment load(std::optional<double>* plan_alpha = nullptr) const {
        if (!file.empty()) {
            const nlohmann::json doc = read_json_file(file);
            if (plan_alpha && doc.is_object() && doc.contains("requested_alpha")) {
                *plan_alpha = doc.at("requested_alpha").get<double>();
            }
            try {
                return deployment_from_json(doc);
            } catch (const DomainError& e) {
                throw UsageError(fmt::format("'{}': {}", file, e.what()));
            }
        }
        if (!spacing || field.empty()) {
            throw UsageError("give --deployment FILE, or --spacing and --field");
        }
        require_positive(*spacing, "spacing");
        require_positive(rs, "rs");
        return generate_triangular_lattice(parse_field(field), *spacing, rs);
    }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Plan and verify triangular-lattice sensor deployments for partial coverage",
                 "wsnplan"};
    app.require_subcommand(1);

    // plan
    auto* plan_cmd = app.add_subcommand("plan", "Spacing, minimum Rc and deployment for a coverage fraction");
    double plan_alpha = 0.0;
    double plan_rs = 1.0;
    std::string plan_field;
    bool plan_base_station = false;
    std::string plan_format = "json";
    std::string plan_output;
    plan_cmd->add_option("--alpha", plan_alpha, "Coverage fraction in (0,1]")->required();
    plan_cmd->add_option("--rs", plan_rs, "Sensing radius")->capture_default_str();
    plan_cmd->add_option("--field", plan_field, "Field size WxH")->required();
    plan_cmd->add_flag("--base-station", plan_base_station, "Designate the node nearest the centroid");
    plan_cmd->add_option("--format", plan_format, "json (plan) or csv (node list)")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    plan_cmd->add_option("--output,-o", plan_output, "Output file (default stdout)");

    // table
    auto* table_cmd = app.add_subcommand("table", "Lookup table of alpha against spacing and Rc_min");
    std::string table_grid;
    std::string table_format = "csv";
    std::string table_output;
    table_cmd->add_option("--grid", table_grid, "Alpha grid min:max:step")->required();
    table_cmd->add_option("--format", table_format, "csv or json")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    table_cmd->add_option("--output,-o", table_output, "Output file (default stdout)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Estimate coverage and check connectivity");
    DeploymentSource verify_source;
    verify_source.add_to(*verify_cmd);
    double verify_rc = 0.0;
    std::optional<double> verify_alpha;
    std::size_t verify_samples = 1'000'000;
    std::uint64_t verify_seed = 42;
    std::string verify_window = "interior";
    std::string verify_mode = "mc";
    std::string verify_output;
    verify_cmd->add_option("--rc", verify_rc, "Communication radius")->required();
    verify_cmd->add_option("--alpha", verify_alpha, "Required coverage fraction");
    verify_cmd->add_option("--samples", verify_samples, "Monte Carlo samples, or grid points per axis")
        ->capture_default_str();
    verify_cmd->add_option("--seed", verify_seed, "Monte Carlo seed")->capture_default_str();
    verify_cmd->add_option("--window", verify_window, "interior or full")
        ->check(CLI::IsMember({"interior", "full"}))
        ->capture_default_str();
    verify_cmd->add_option("--mode", verify_mode, "mc or grid")
        ->check(CLI::IsMember({"mc", "grid"}))
        ->capture_default_str();
    verify_cmd->add_option("--output,-o", verify_output, "Output file (default stdout)");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Analytic and Monte Carlo alpha over a range of d/Rs");
    std::string sweep_range;
    double sweep_rs = 1.0;
    std::size_t sweep_samples = 1'000'000;
    std::uint64_t sweep_seed = 42;
    std::string sweep_output;
    sweep_cmd->add_option("--range", sweep_range, "d/Rs range min:max:step")->required();
    sweep_cmd->add_option("--rs", sweep_rs, "Sensing radius")->capture_default_str();
    sweep_cmd->add_option("--samples", sweep_samples, "Monte Carlo samples per row")->capture_default_str();
    sweep_cmd->add_option("--seed", sweep_seed, "Monte Carlo seed")->capture_default_str();
    sweep_cmd->add_option("--output,-o", sweep_output, "Output file (default stdout)");

    // render
    auto* render_cmd = app.add_subcommand("render", "Draw a deployment as SVG");
    DeploymentSource render_source;
    render_source.add_to(*render_cmd);
    std::optional<double> render_rc;
    std::string render_output;
    render_cmd->add_option("--rc", render_rc, "Draw links within this radius");
    render_cmd->add_option("--output,-o", render_output, "SVG file (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "wsnplan: error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (plan_cmd->parsed()) {
            require_positive(plan_rs, "rs");
            const SensingField field = parse_field(plan_field);
            const CoveragePlan plan = plan_deployment(field, plan_alpha, plan_rs, plan_base_station);
            const std::string text = plan_format == "csv" ? deployment_csv(plan.deployment)
                                                          : plan_json(plan).dump(2) + "\n";
            emit(text, plan_output, out);
            return kExitOk;
        }

        if (table_cmd->parsed()) {
            const std::vector<double> alphas = expand_range(parse_range(table_grid, "alpha grid"));
            const LookupTable table = build_lookup_table(alphas);
            const std::string text = table_format == "csv" ? lookup_table_csv(table)
                                                           : lookup_table_json(table).dump(2) + "\n";
            emit(text, table_output, out);
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            require_positive(verify_rc, "rc");
            std::optional<double> plan_alpha_from_file;
            const Deployment dep = verify_source.load(&plan_alpha_from_file);
            const std::optional<double> required = verify_alpha ? verify_alpha : plan_alpha_from_file;
            if (required && !(*required > 0.0 && *required <= 1.0)) {
                throw UsageError("alpha must be in (0,1]");
            }
            if (dep.empty()) {
                throw UsageError("deployment has no nodes");
            }
            const SamplingMode mode = verify_mode == "grid" ? SamplingMode::Grid : SamplingMode::MonteCarlo;
            const SamplingWindow window =
                verify_window == "full" ? SamplingWindow::FullField : SamplingWindow::Interior;
            const CoverageEstimate estimate =
                estimate_coverage_fraction(dep, mode, window, verify_samples, verify_seed);
            const ConnectivityReport link = check_connectivity(dep, verify_rc);

            const bool coverage_ok =
                !required || estimate.fraction + estimate.half_width_95 >= *required;
            const bool pass = link.connected && coverage_ok;

            nlohmann::json report = estimate_json(estimate);
            report.update(connectivity_json(link));
            report["requested_alpha"] = required ? nlohmann::json(*required) : nlohmann::json(nullptr);
            report["pass"] = pass;
            emit(report.dump(2) + "\n", verify_output, out);
            return pass ? kExitOk : kExitVerificationFailed;
        }

        if (sweep_cmd->parsed()) {
            require_positive(sweep_rs, "rs");
            if (sweep_samples < 1) throw UsageError("samples must be positive");
            const RangeSpec range = parse_range(sweep_range, "d/Rs range");
            if (!(range.min > 0.0)) throw UsageError("d/Rs range must be positive");
            std::string text = "d_over_Rs,alpha_analytic,alpha_hat,ci95\n";
            for (double ratio : expand_range(range)) {
                const double d = ratio * sweep_rs;
                const double side = kSweepFieldSpacings * d;
                const Deployment dep = generate_triangular_lattice(SensingField(side, side), d, sweep_rs);
                const CoverageEstimate estimate = estimate_coverage_fraction(
                    dep, SamplingMode::MonteCarlo, SamplingWindow::Interior, sweep_samples, sweep_seed);
                text += fmt::format("{:.12g},{:.12g},{:.12g},{:.12g}\n", ratio, alpha_of_spacing(d, sweep_rs),
                                    estimate.fraction, estimate.half_width_95);
            }
            emit(text, sweep_output, out);
            return kExitOk;
        }

        if (render_cmd->parsed()) {
            if (render_rc) require_positive(*render_rc, "rc");
            const Deployment dep = render_source.load();
            emit(render_svg(dep, render_rc), render_output, out);
            return kExitOk;
        }
    } catch (const UsageError& e) {
        err << "wsnplan: error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "wsnplan: error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace wsncov::cli
