#include "rotorkit/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rotorkit/errors.hpp"
#include "rotorkit/table2.hpp"

namespace rotorkit {

namespace {

using json = nlohmann::ordered_json;

std::string format_number(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
    return buf;
}

const char* command_name(Command c) {
    switch (c) {
        case Command::validate: return "validate";
        case Command::coupling: return "coupling";
        case Command::gra: return "gra";
        case Command::rotation: return "rotation";
        case Command::report: return "report";
    }
    return "?";
}

const char* preprocessing_name(GraPreprocessing p) {
    switch (p) {
        case GraPreprocessing::initial_value: return "initial-value";
        case GraPreprocessing::mean_value: return "mean-value";
        case GraPreprocessing::min_max: return "min-max";
        case GraPreprocessing::none: return "none";
    }
    return "?";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::input_unreadable, "cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Header-derived schema: every column except the date column becomes a value
// column; the aggregate is the explicitly named column, or one literally
// named "aggregate".
PanelSchema infer_schema(std::string_view csv_text,
                         const std::string& date_column,
                         const std::optional<std::string>& aggregate_column) {
    std::size_t eol = csv_text.find('\n');
    std::string header(csv_text.substr(
        0, eol == std::string_view::npos ? csv_text.size() : eol));
    const std::string aggregate_name = aggregate_column.value_or("aggregate");
    PanelSchema schema;
    schema.date_column = date_column;
    std::size_t start = 0;
    while (start <= header.size()) {
        std::size_t pos = header.find(',', start);
        std::string cell = header.substr(
            start, pos == std::string::npos ? std::string::npos : pos - start);
        while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' '))
            cell.pop_back();
        while (!cell.empty() && cell.front() == ' ') cell.erase(cell.begin());
        if (cell == aggregate_name) {
            schema.aggregate_column = cell;
        } else if (!cell.empty() && cell != date_column) {
            schema.value_columns.push_back(cell);
        }
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    if (aggregate_column && !schema.aggregate_column) {
        throw Error(ErrorKind::column_missing,
                    "column '" + *aggregate_column + "' not in header");
    }
    return schema;
}

json violations_json(const std::vector<Violation>& violations) {
    json out = json::array();
    for (const auto& v : violations) {
        json item;
        switch (v.kind) {
            case ViolationKind::non_positive_value:
                item["kind"] = "NonPositiveValue";
                break;
            case ViolationKind::non_finite_value:
                item["kind"] = "NonFiniteValue";
                break;
            case ViolationKind::dates_not_increasing:
                item["kind"] = "DatesNotIncreasing";
                break;
            case ViolationKind::length_mismatch:
                item["kind"] = "LengthMismatch";
                break;
            case ViolationKind::aggregate_mismatch:
                item["kind"] = "AggregateMismatch";
                break;
        }
        item["date"] = v.date.to_iso();
        item["column"] = v.column;
        item["observed"] = v.observed;
        item["expected"] = v.expected;
        item["message"] = v.message;
        out.push_back(std::move(item));
    }
    return out;
}

json points_json(const std::vector<CoordinationPoint>& points) {
    json out = json::array();
    for (const auto& p : points) {
        out.push_back({{"date", p.date.to_iso()},
                       {"c", p.c},
                       {"t", p.t},
                       {"d", p.d},
                       {"c_stage", p.c_stage},
                       {"d_stage", p.d_stage}});
    }
    return out;
}

json episodes_json(const std::vector<RotationEpisode>& episodes) {
    json out = json::array();
    for (const auto& ep : episodes) {
        json deltas;
        for (std::size_t i = 0; i < ep.index_names.size(); ++i)
            deltas[ep.index_names[i]] = ep.share_delta[i];
        out.push_back({{"start", ep.start.to_iso()},
                       {"end", ep.end.to_iso()},
                       {"share_delta", std::move(deltas)},
                       {"donors", ep.donors},
                       {"recipients", ep.recipients}});
    }
    return out;
}

json regimes_json(const std::vector<RegimeWindow>& regimes) {
    json out = json::array();
    for (const auto& r : regimes) {
        out.push_back({{"start", r.start.to_iso()},
                       {"end", r.end.to_iso()},
                       {"length", r.length},
                       {"max_min_ratio", r.max_min_ratio}});
    }
    return out;
}

json config_json(const RunConfig& config) {
    json j;
    j["input"] = config.input;
    j["command"] = command_name(config.command);
    j["members"] = config.members;
    j["parent"] = config.parent;
    j["normalization"] = {
        {"floor_epsilon", config.normalization.floor_epsilon},
        {"constant_series_value", config.normalization.constant_series_value},
        {"window_length", config.normalization.window_length}};
    j["weights"] = config.weights.w;
    j["gra"] = {{"rho", config.gra.rho},
                {"preprocessing", preprocessing_name(config.gra.preprocessing)}};
    j["regime"] = {{"band_ratio", config.regime.band_ratio},
                   {"min_window_days", config.regime.min_window_days}};
    j["share_threshold"] = config.share_threshold;
    json windows = json::array();
    for (const auto& w : config.windows)
        windows.push_back({{"start", w.start.to_iso()}, {"end", w.end.to_iso()}});
    j["windows"] = std::move(windows);
    j["dedupe"] = config.dedupe;
    j["precision"] = config.precision;
    return j;
}

Weights resolve_weights(const RunConfig& config, std::size_t n) {
    if (config.weights.w.empty()) return Weights::equal(n);
    if (config.weights.size() != n) {
        throw Error(ErrorKind::config_invalid,
                    "expected " + std::to_string(n) + " weights, got " +
                        std::to_string(config.weights.size()));
    }
    config.weights.validate();
    return config.weights;
}

std::vector<std::string> resolve_members(const RunConfig& config,
                                         const Panel& panel) {
    std::vector<std::string> members =
        config.members.empty() ? panel.names : config.members;
    for (const auto& m : members) panel.series_index(m);  // throws on unknown
    return members;
}

Panel restrict_panel(const Panel& panel,
                     const std::vector<std::string>& members) {
    if (members == panel.names) return panel;
    Panel out;
    out.dates = panel.dates;
    for (const auto& name : members) {
        out.names.push_back(name);
        out.columns.push_back(panel.columns[panel.series_index(name)]);
    }
    return out;  // stored aggregate no longer applies to a subset
}

void write_artifact(const RunConfig& config, const std::string& text,
                    std::ostream& out) {
    if (config.output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file) {
        throw Error(ErrorKind::input_unreadable,
                    "cannot write '" + config.output_path + "'");
    }
    file << text;
}

std::string wrap_json(const RunConfig& config, json results,
                      const std::vector<std::string>& warnings) {
    json doc;
    doc["config"] = config_json(config);
    doc["results"] = std::move(results);
    doc["warnings"] = warnings;
    return doc.dump(2) + "\n";
}

}  // namespace

Panel load_input(const RunConfig& config, std::vector<std::string>* warnings) {
    Panel panel;
    if (config.input == "fixture:table2") {
        panel = parse_panel(table2_csv(), table2_schema(), warnings);
    } else if (config.input.rfind("fixture:", 0) == 0) {
        throw Error(ErrorKind::input_unreadable,
                    "unknown fixture '" + config.input + "'");
    } else {
        std::string text = read_file(config.input);
        PanelSchema schema = config.schema;
        if (schema.value_columns.empty()) {
            schema = infer_schema(text, config.schema.date_column,
                                  config.schema.aggregate_column);
        }
        panel = parse_panel(text, schema, warnings);
    }
    if (config.dedupe) panel = dedupe_stale_dates(panel);
    return panel;
}

Report build_report(const RunConfig& config) {
    Report report;
    report.config = config;
    report.panel = load_input(config, &report.warnings);
    const Panel& full = report.panel;

    auto members = resolve_members(config, full);
    report.parent = config.parent.empty() ? members.front() : config.parent;
    full.series_index(report.parent);
    if (std::find(members.begin(), members.end(), report.parent) ==
        members.end()) {
        throw Error(ErrorKind::config_invalid,
                    "parent '" + report.parent + "' must be one of the members");
    }

    Panel working = restrict_panel(full, members);
    report.violations = validate_panel(full);
    report.level_indices = compute_level_indices(
        working, config.normalization, NormalizationScope::per_series);

    for (const auto& m : members) {
        if (m == report.parent) continue;
        report.pair_members.push_back(m);
        report.pair_series.push_back(coordination_series(
            working, {report.parent, m}, config.normalization,
            resolve_weights(config, 2)));
    }

    if (members.size() >= 2) {
        report.gra = gra_grades(working, report.parent, config.gra);
    }

    report.regimes = detect_stock_fund_regime(working, config.regime);

    // Episode windows: the regime windows themselves, each member's largest
    // share swing inside each regime, then any user-supplied windows.
    std::vector<DateWindow> windows = to_date_windows(report.regimes);
    for (const auto& regime : report.regimes) {
        for (const auto& m : members) {
            DateWindow w =
                peak_share_window(working, m, {regime.start, regime.end});
            if (!(w.start < w.end)) continue;
            bool seen = false;
            for (const auto& other : windows) {
                if (other.start == w.start && other.end == w.end) {
                    seen = true;
                    break;
                }
            }
            if (!seen) windows.push_back(w);
        }
    }
    for (const auto& w : config.windows) windows.push_back(w);
    report.episodes =
        detect_rotation_episodes(working, windows, config.share_threshold);

    // Signed co-movement of first differences per member pair, over the full
    // range and over each regime window.
    std::vector<DateWindow> comovement_windows;
    if (working.row_count() >= 2) {
        comovement_windows.push_back(
            {working.dates.front(), working.dates.back()});
    }
    for (const auto& regime : report.regimes) {
        if (regime.start == working.dates.front() &&
            regime.end == working.dates.back()) {
            continue;
        }
        comovement_windows.push_back({regime.start, regime.end});
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            for (const auto& w : comovement_windows) {
                try {
                    double r = change_comovement(working.series(members[i]),
                                                 working.series(members[j]),
                                                 w.start, w.end);
                    report.comovements.push_back(
                        {members[i], members[j], w.start, w.end, r});
                } catch (const Error&) {
                    report.warnings.push_back(
                        "co-movement undefined for " + members[i] + "~" +
                        members[j] + " over " + w.start.to_iso() + ".." +
                        w.end.to_iso());
                }
            }
        }
    }

    // Data-driven observations.
    for (const auto& ep : report.episodes) {
        std::string note = "rotation " + ep.start.to_iso() + ".." +
                           ep.end.to_iso() + ":";
        for (std::size_t i = 0; i < ep.index_names.size(); ++i) {
            double ret = window_return(working.series(ep.index_names[i]),
                                       ep.start, ep.end);
            note += " " + ep.index_names[i] + " share " +
                    format_number(ep.share_delta[i] * 100.0, 2) +
                    "pp return " + format_number(ret * 100.0, 2) + "%;";
        }
        report.notes.push_back(std::move(note));
    }
    for (const auto& cm : report.comovements) {
        if (cm.start != working.dates.front() ||
            cm.end != working.dates.back()) {
            continue;
        }
        report.notes.push_back(
            "diff correlation " + cm.a + "~" + cm.b + " over " +
            cm.start.to_iso() + ".." + cm.end.to_iso() + ": " +
            format_number(cm.correlation, 4) +
            (cm.correlation < 0.0 ? " (negative)" : " (positive)"));
    }

    return report;
}

std::string report_to_json(const Report& report) {
    const Panel& working = restrict_panel(
        report.panel, report.config.members.empty() ? report.panel.names
                                                    : report.config.members);
    json results;

    results["panel"] = {
        {"rows", report.panel.row_count()},
        {"indices", report.panel.names},
        {"date_range",
         report.panel.row_count() == 0
             ? json::array()
             : json::array({report.panel.dates.front().to_iso(),
                            report.panel.dates.back().to_iso()})},
        {"has_aggregate", report.panel.aggregate.has_value()}};

    results["validation"] = violations_json(report.violations);

    auto totals = compute_aggregate(working);
    if (!totals.empty()) {
        auto [lo, hi] = std::minmax_element(totals.begin(), totals.end());
        results["aggregate"] = {
            {"min", *lo}, {"max", *hi}, {"max_min_ratio", *hi / *lo}};
    }

    {
        json levels;
        json dates = json::array();
        for (const auto& lv : report.level_indices)
            dates.push_back(lv.date.to_iso());
        levels["dates"] = std::move(dates);
        json series;
        if (!report.level_indices.empty()) {
            const auto& names = report.level_indices.front().index_names;
            for (std::size_t i = 0; i < names.size(); ++i) {
                json col = json::array();
                for (const auto& lv : report.level_indices)
                    col.push_back(lv.u[i]);
                series[names[i]] = std::move(col);
            }
        }
        levels["series"] = std::move(series);
        results["level_indices"] = std::move(levels);
    }

    {
        json pairs = json::array();
        for (std::size_t i = 0; i < report.pair_members.size(); ++i) {
            pairs.push_back(
                {{"members",
                  json::array({report.parent, report.pair_members[i]})},
                 {"points", points_json(report.pair_series[i])}});
        }
        results["coordination"] = std::move(pairs);
    }

    {
        json gra;
        gra["parent"] = report.gra.parent;
        json grades;
        for (std::size_t i = 0; i < report.gra.children.size(); ++i)
            grades[report.gra.children[i]] = report.gra.grades[i];
        gra["grades"] = std::move(grades);
        json coeffs;
        for (std::size_t i = 0; i < report.gra.children.size(); ++i)
            coeffs[report.gra.children[i]] = report.gra.coefficients[i];
        gra["coefficients"] = std::move(coeffs);
        results["gra"] = std::move(gra);
    }

    results["regimes"] = regimes_json(report.regimes);
    results["episodes"] = episodes_json(report.episodes);

    {
        json returns = json::array();
        for (const auto& ep : report.episodes) {
            json per_index;
            for (const auto& name : ep.index_names) {
                per_index[name] =
                    window_return(working.series(name), ep.start, ep.end);
            }
            returns.push_back({{"start", ep.start.to_iso()},
                               {"end", ep.end.to_iso()},
                               {"returns", std::move(per_index)}});
        }
        results["window_returns"] = std::move(returns);
    }

    {
        json cm = json::array();
        for (const auto& c : report.comovements) {
            cm.push_back({{"a", c.a},
                          {"b", c.b},
                          {"start", c.start.to_iso()},
                          {"end", c.end.to_iso()},
                          {"correlation", c.correlation},
                          {"sign", c.correlation < 0.0 ? "negative" : "positive"}});
        }
        results["comovement"] = std::move(cm);
    }

    results["notes"] = report.notes;

    return wrap_json(report.config, std::move(results), report.warnings);
}

std::vector<std::string> emit_plot_series(const Report& report,
                                          const std::string& dir,
                                          std::vector<std::string>* warnings) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    std::vector<std::string> written;
    const int precision = report.config.precision;

    const Panel& working = restrict_panel(
        report.panel, report.config.members.empty() ? report.panel.names
                                                    : report.config.members);

    {
        auto totals = compute_aggregate(working);
        std::string csv = "date,aggregate\n";
        for (std::size_t t = 0; t < working.row_count(); ++t) {
            csv += working.dates[t].to_iso();
            csv += ',';
            csv += format_number(totals[t], precision);
            csv += '\n';
        }
        auto path = (fs::path(dir) / "aggregate.csv").string();
        std::ofstream(path, std::ios::binary) << csv;
        written.push_back(path);
    }

    {
        auto path = (fs::path(dir) / "trends.csv").string();
        std::ofstream(path, std::ios::binary)
            << level_indices_to_csv(report.level_indices, precision);
        written.push_back(path);
    }

    {
        std::string csv = "a,b,start,end,correlation,sign\n";
        for (const auto& cm : report.comovements) {
            csv += cm.a + "," + cm.b + "," + cm.start.to_iso() + "," +
                   cm.end.to_iso() + "," +
                   format_number(cm.correlation, precision) + "," +
                   (cm.correlation < 0.0 ? "negative" : "positive") + "\n";
        }
        auto path = (fs::path(dir) / "comovement.csv").string();
        std::ofstream(path, std::ios::binary) << csv;
        written.push_back(path);
    }

    if (report.pair_members.empty()) {
        if (warnings)
            warnings->push_back("no member pairs; no coordination files written");
        return written;
    }
    for (std::size_t i = 0; i < report.pair_members.size(); ++i) {
        auto path = (fs::path(dir) / ("coordination_" + report.parent + "_" +
                                      report.pair_members[i] + ".csv"))
                        .string();
        std::ofstream(path, std::ios::binary)
            << coordination_to_csv(report.pair_series[i], precision);
        written.push_back(path);
    }
    return written;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        OutputFormat format = config.output_format.value_or(
            config.command == Command::coupling ? OutputFormat::csv
                                                : OutputFormat::json);

        switch (config.command) {
            case Command::validate: {
                std::vector<std::string> warnings;
                Panel panel = load_input(config, &warnings);
                auto violations = validate_panel(panel);
                if (format == OutputFormat::json) {
                    json results;
                    results["violations"] = violations_json(violations);
                    results["violation_count"] = violations.size();
                    write_artifact(config,
                                   wrap_json(config, std::move(results), warnings),
                                   out);
                } else {
                    std::string csv = "kind,date,column,observed,expected\n";
                    auto arr = violations_json(violations);
                    for (const auto& v : arr) {
                        csv += v["kind"].get<std::string>() + "," +
                               v["date"].get<std::string>() + "," +
                               v["column"].get<std::string>() + "," +
                               format_number(v["observed"].get<double>(),
                                             config.precision) +
                               "," +
                               format_number(v["expected"].get<double>(),
                                             config.precision) +
                               "\n";
                    }
                    write_artifact(config, csv, out);
                }
                return 0;
            }

            case Command::coupling: {
                std::vector<std::string> warnings;
                Panel panel = load_input(config, &warnings);
                auto members = resolve_members(config, panel);
                if (members.size() < 2) {
                    throw Error(ErrorKind::config_invalid,
                                "coupling needs at least 2 members");
                }
                auto points = coordination_series(
                    panel, members, config.normalization,
                    resolve_weights(config, members.size()));
                if (format == OutputFormat::csv) {
                    write_artifact(
                        config, coordination_to_csv(points, config.precision),
                        out);
                } else {
                    json results;
                    results["members"] = members;
                    results["points"] = points_json(points);
                    write_artifact(config,
                                   wrap_json(config, std::move(results), warnings),
                                   out);
                }
                return 0;
            }

            case Command::gra: {
                if (config.parent.empty()) {
                    throw Error(ErrorKind::config_invalid,
                                "gra requires --parent");
                }
                std::vector<std::string> warnings;
                Panel panel = load_input(config, &warnings);
                Panel working = restrict_panel(panel,
                                               resolve_members(config, panel));
                auto result = gra_grades(working, config.parent, config.gra);
                if (format == OutputFormat::csv) {
                    write_artifact(config,
                                   gra_coefficients_to_csv(result, working.dates,
                                                           config.precision),
                                   out);
                } else {
                    json results;
                    results["parent"] = result.parent;
                    json grades;
                    for (std::size_t i = 0; i < result.children.size(); ++i)
                        grades[result.children[i]] = result.grades[i];
                    results["grades"] = std::move(grades);
                    write_artifact(config,
                                   wrap_json(config, std::move(results), warnings),
                                   out);
                }
                return 0;
            }

            case Command::rotation: {
                Report report = build_report(config);
                if (format == OutputFormat::csv) {
                    const Panel& working = restrict_panel(
                        report.panel, config.members.empty()
                                          ? report.panel.names
                                          : config.members);
                    auto shares = market_shares(working);
                    std::string csv = "date";
                    for (const auto& name : working.names) csv += "," + name;
                    csv += '\n';
                    for (std::size_t t = 0; t < working.row_count(); ++t) {
                        csv += working.dates[t].to_iso();
                        for (double s : shares[t])
                            csv += "," + format_number(s, config.precision);
                        csv += '\n';
                    }
                    write_artifact(config, csv, out);
                } else {
                    json results;
                    results["regimes"] = regimes_json(report.regimes);
                    results["episodes"] = episodes_json(report.episodes);
                    json returns = json::array();
                    const Panel& working = restrict_panel(
                        report.panel, config.members.empty()
                                          ? report.panel.names
                                          : config.members);
                    for (const auto& ep : report.episodes) {
                        json per_index;
                        for (const auto& name : ep.index_names) {
                            per_index[name] = window_return(
                                working.series(name), ep.start, ep.end);
                        }
                        returns.push_back({{"start", ep.start.to_iso()},
                                           {"end", ep.end.to_iso()},
                                           {"returns", std::move(per_index)}});
                    }
                    results["window_returns"] = std::move(returns);
                    results["notes"] = report.notes;
                    write_artifact(config,
                                   wrap_json(config, std::move(results),
                                             report.warnings),
                                   out);
                }
                return 0;
            }

            case Command::report: {
                Report report = build_report(config);
                std::string doc = report_to_json(report);
                if (!config.plots_dir.empty()) {
                    emit_plot_series(report, config.plots_dir,
                                     &report.warnings);
                }
                write_artifact(config, doc, out);
                return 0;
            }
        }
        return 3;
    } catch (const Error& e) {
        json error = {{"error", {{"kind", to_string(e.kind())},
                                 {"message", e.what()}}}};
        err << error.dump() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        json error = {{"error", {{"kind", "Internal"}, {"message", e.what()}}}};
        err << error.dump() << "\n";
        return 3;
    }
}

}  // namespace rotorkit
