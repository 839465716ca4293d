#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rotorkit/errors.hpp"
#include "rotorkit/report.hpp"

namespace {

using rotorkit::Command;
using rotorkit::Error;
using rotorkit::ErrorKind;
using rotorkit::RunConfig;

struct CliState {
    RunConfig config;
    std::string format;
    std::string preprocessing = "initial-value";
    std::vector<std::string> windows;
    std::vector<double> weights;
};

void add_common(CLI::App* cmd, CliState& state) {
    cmd->fallthrough();  // let --config on the main app work after a subcommand
    cmd->add_option("-i,--input", state.config.input,
                    "CSV path or fixture:table2")
        ->capture_default_str();
    cmd->add_option("-o,--output", state.config.output_path,
                    "output path (default: standard output)");
    cmd->add_option("--format", state.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--precision", state.config.precision,
                    "decimal places in numeric output")
        ->capture_default_str();
    cmd->add_flag("--dedupe", state.config.dedupe,
                  "drop consecutive near-identical rows before analysis");
    cmd->add_option("--date-column", state.config.schema.date_column,
                    "date column name")
        ->capture_default_str();
    cmd->add_option("--columns", state.config.schema.value_columns,
                    "value columns to read (default: all)")
        ->delimiter(',');
    cmd->add_option_function<std::string>(
        "--aggregate-column",
        [&state](const std::string& v) { state.config.schema.aggregate_column = v; },
        "aggregate column name");
}

void add_members(CLI::App* cmd, CliState& state) {
    cmd->add_option("--members", state.config.members,
                    "index subset (default: all)")
        ->delimiter(',');
}

void add_normalization(CLI::App* cmd, CliState& state) {
    cmd->add_option("--floor-epsilon", state.config.normalization.floor_epsilon,
                    "lower clamp for level indices")
        ->capture_default_str();
    cmd->add_option("--constant-value",
                    state.config.normalization.constant_series_value,
                    "level index for constant windows")
        ->capture_default_str();
    cmd->add_option("--window-length",
                    state.config.normalization.window_length,
                    "trailing normalization window (0 = whole series)")
        ->capture_default_str();
    cmd->add_option("--weights", state.weights,
                    "composite-level weights (default: equal)")
        ->delimiter(',');
}

void add_gra(CLI::App* cmd, CliState& state) {
    cmd->add_option("--parent", state.config.parent,
                    "parent (reference) series");
    cmd->add_option("--rho", state.config.gra.rho, "resolution coefficient")
        ->capture_default_str();
    cmd->add_option("--preprocessing", state.preprocessing,
                    "sequence preprocessing")
        ->check(CLI::IsMember({"initial-value", "mean-value", "min-max", "none"}))
        ->capture_default_str();
}

void add_rotation(CLI::App* cmd, CliState& state) {
    cmd->add_option("--band-ratio", state.config.regime.band_ratio,
                    "max/min aggregate ratio for a stable pool")
        ->capture_default_str();
    cmd->add_option("--min-window-days", state.config.regime.min_window_days,
                    "minimum regime window length")
        ->capture_default_str();
    cmd->add_option("--share-threshold", state.config.share_threshold,
                    "absolute share change marking donors/recipients")
        ->capture_default_str();
    cmd->add_option("--window", state.windows,
                    "extra episode window START:END (repeatable)");
}

void finalize(CliState& state) {
    if (!state.format.empty()) {
        state.config.output_format = state.format == "csv"
                                         ? rotorkit::OutputFormat::csv
                                         : rotorkit::OutputFormat::json;
    }
    if (state.preprocessing == "initial-value")
        state.config.gra.preprocessing = rotorkit::GraPreprocessing::initial_value;
    else if (state.preprocessing == "mean-value")
        state.config.gra.preprocessing = rotorkit::GraPreprocessing::mean_value;
    else if (state.preprocessing == "min-max")
        state.config.gra.preprocessing = rotorkit::GraPreprocessing::min_max;
    else
        state.config.gra.preprocessing = rotorkit::GraPreprocessing::none;

    state.config.weights.w = state.weights;

    for (const auto& text : state.windows) {
        auto pos = text.find(':');
        if (pos == std::string::npos) {
            throw Error(ErrorKind::config_invalid,
                        "--window expects START:END, got '" + text + "'");
        }
        rotorkit::Date start, end;
        if (!rotorkit::Date::try_parse(text.substr(0, pos), start) ||
            !rotorkit::Date::try_parse(text.substr(pos + 1), end)) {
            throw Error(ErrorKind::config_invalid,
                        "--window has an unparseable date: '" + text + "'");
        }
        state.config.windows.push_back({start, end});
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coupling, grey-relation and rotation analytics over "
                 "multi-index market-value panels"};
    app.set_config("--config", "", "read options from a TOML-style file");
    app.require_subcommand(1);

    CliState state;

    auto* validate = app.add_subcommand("validate", "check panel invariants");
    add_common(validate, state);

    auto* coupling =
        app.add_subcommand("coupling", "per-date coupling coordination series");
    add_common(coupling, state);
    add_members(coupling, state);
    add_normalization(coupling, state);

    auto* gra = app.add_subcommand("gra", "grey relational grades");
    add_common(gra, state);
    add_members(gra, state);
    add_gra(gra, state);

    auto* rotation =
        app.add_subcommand("rotation", "stable-pool regimes and rotation episodes");
    add_common(rotation, state);
    add_members(rotation, state);
    add_rotation(rotation, state);

    auto* report = app.add_subcommand("report", "full pipeline in one JSON document");
    add_common(report, state);
    add_members(report, state);
    add_normalization(report, state);
    add_gra(report, state);
    add_rotation(report, state);
    report->add_option("--plots", state.config.plots_dir,
                       "also write plot-ready CSVs into this directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "{\"error\":{\"kind\":\"ConfigInvalid\",\"message\":\""
                  << e.what() << "\"}}\n";
        return 1;
    }

    if (validate->parsed()) state.config.command = Command::validate;
    else if (coupling->parsed()) state.config.command = Command::coupling;
    else if (gra->parsed()) state.config.command = Command::gra;
    else if (rotation->parsed()) state.config.command = Command::rotation;
    else state.config.command = Command::report;

    try {
        finalize(state);
    } catch (const Error& e) {
        std::cerr << "{\"error\":{\"kind\":\"" << to_string(e.kind())
                  << "\",\"message\":\"" << e.what() << "\"}}\n";
        return 1;
    }

    return rotorkit::run(state.config, std::cout, std::cerr);
}
