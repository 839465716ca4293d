#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rotorkit/coupling.hpp"
#include "rotorkit/grey_relation.hpp"
#include "rotorkit/level_index.hpp"
#include "rotorkit/panel.hpp"
#include "rotorkit/rotation.hpp"

namespace rotorkit {

enum class Command { validate, coupling, gra, rotation, report };
enum class OutputFormat { csv, json };

struct RunConfig {
    std::string input = "fixture:table2";  // file path or fixture address
    Command command = Command::report;
    std::vector<std::string> members;     // default: all panel series
    std::string parent;                   // default: first panel series
    NormalizationConfig normalization;
    Weights weights;                      // empty -> equal weights
    GraConfig gra;
    RegimeConfig regime;
    double share_threshold = 0.005;
    std::vector<DateWindow> windows;      // extra rotation windows
    bool dedupe = false;                  // opt-in stale-row removal
    // Unset -> per-command default (csv for coupling, json otherwise).
    std::optional<OutputFormat> output_format;
    std::string output_path;              // empty -> standard output
    std::string plots_dir;                // empty -> no plot bundle
    int precision = 6;
    PanelSchema schema;                   // empty value_columns -> all columns
};

// Everything the `report` command computes, kept as data so the JSON
// document and the plot bundle come from one pipeline pass.
struct Report {
    RunConfig config;
    Panel panel;
    std::vector<std::string> warnings;
    std::vector<Violation> violations;
    std::vector<LevelIndexVector> level_indices;  // per-series trends
    std::string parent;
    std::vector<std::string> pair_members;        // non-parent members
    std::vector<std::vector<CoordinationPoint>> pair_series;  // parent vs member
    GraResult gra;
    std::vector<RegimeWindow> regimes;
    std::vector<RotationEpisode> episodes;
    // Diff correlation for every member pair, with window and sign.
    struct Comovement {
        std::string a;
        std::string b;
        Date start;
        Date end;
        double correlation = 0.0;
    };
    std::vector<Comovement> comovements;
    std::vector<std::string> notes;  // data-driven observations
};

// Reads a CSV path or `fixture:table2`. Throws Error{input_unreadable, ...}.
Panel load_input(const RunConfig& config, std::vector<std::string>* warnings);

Report build_report(const RunConfig& config);

std::string report_to_json(const Report& report);

// One CSV per figure analogue: aggregate-vs-date, normalized index trends,
// and one coordination file per (parent, member) pair. Returns the written
// paths; an empty pair list only warns.
std::vector<std::string> emit_plot_series(const Report& report,
                                          const std::string& dir,
                                          std::vector<std::string>* warnings);

// Runs one command end to end, writing the artifact to config.output_path
// (or `out` when the path is empty). Returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace rotorkit
