#include "rotorkit/panel.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rotorkit/errors.hpp"

namespace rotorkit {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_line(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(',', start);
        if (pos == std::string_view::npos) {
            out.push_back(trim(line.substr(start)));
            break;
        }
        out.push_back(trim(line.substr(start, pos - start)));
        start = pos + 1;
    }
    return out;
}

double parse_value(std::string_view text, std::size_t line_no,
                   std::string_view column) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() ||
        !std::isfinite(v)) {
        throw Error(ErrorKind::malformed_row,
                    "line " + std::to_string(line_no) + ", column '" +
                        std::string(column) + "': bad number '" +
                        std::string(text) + "'");
    }
    return v;
}

void append_number(std::string& out, double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
    out += buf;
}

}  // namespace

bool Panel::has_series(std::string_view name) const {
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::size_t Panel::series_index(std::string_view name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
        throw Error(ErrorKind::unknown_member,
                    "no series named '" + std::string(name) + "'");
    }
    return static_cast<std::size_t>(it - names.begin());
}

IndexSeries Panel::series(std::size_t i) const {
    return IndexSeries{names.at(i), dates, columns.at(i)};
}

IndexSeries Panel::series(std::string_view name) const {
    return series(series_index(name));
}

std::size_t Panel::date_index(const Date& d) const {
    auto it = std::lower_bound(dates.begin(), dates.end(), d);
    if (it == dates.end() || *it != d) {
        throw Error(ErrorKind::date_not_found,
                    "date " + d.to_iso() + " not in panel");
    }
    return static_cast<std::size_t>(it - dates.begin());
}

Panel parse_panel(std::string_view csv_text, const PanelSchema& schema,
                  std::vector<std::string>* warnings) {
    if (schema.value_columns.size() < 2) {
        throw Error(ErrorKind::config_invalid,
                    "schema needs at least two value columns");
    }

    if (csv_text.substr(0, 3) == "\xEF\xBB\xBF") csv_text.remove_prefix(3);

    // Header.
    std::size_t header_end = csv_text.find('\n');
    if (header_end == std::string_view::npos) header_end = csv_text.size();
    auto header = split_line(csv_text.substr(0, header_end));

    auto column_of = [&](std::string_view name) -> std::size_t {
        auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) {
            throw Error(ErrorKind::column_missing,
                        "column '" + std::string(name) + "' not in header");
        }
        return static_cast<std::size_t>(it - header.begin());
    };

    const std::size_t date_col = column_of(schema.date_column);
    std::vector<std::size_t> value_cols;
    for (const auto& name : schema.value_columns)
        value_cols.push_back(column_of(name));
    std::optional<std::size_t> agg_col;
    if (schema.aggregate_column) agg_col = column_of(*schema.aggregate_column);

    if (warnings) {
        for (std::size_t i = 0; i < header.size(); ++i) {
            bool used = i == date_col || (agg_col && i == *agg_col) ||
                        std::find(value_cols.begin(), value_cols.end(), i) !=
                            value_cols.end();
            if (!used) {
                warnings->push_back("ignoring extra column '" +
                                    std::string(header[i]) + "'");
            }
        }
    }

    struct Row {
        Date date;
        std::vector<double> values;
        double aggregate;
    };
    std::vector<Row> rows;

    std::size_t line_no = 1;
    std::size_t pos = header_end;
    while (pos < csv_text.size()) {
        ++pos;  // skip '\n'
        std::size_t eol = csv_text.find('\n', pos);
        if (eol == std::string_view::npos) eol = csv_text.size();
        std::string_view line = trim(csv_text.substr(pos, eol - pos));
        pos = eol;
        ++line_no;
        if (line.empty()) continue;

        auto cells = split_line(line);
        if (cells.size() != header.size()) {
            throw Error(ErrorKind::malformed_row,
                        "line " + std::to_string(line_no) + ": expected " +
                            std::to_string(header.size()) + " cells, got " +
                            std::to_string(cells.size()));
        }

        Row row;
        if (!Date::try_parse(cells[date_col], row.date)) {
            throw Error(ErrorKind::malformed_row,
                        "line " + std::to_string(line_no) + ": bad date '" +
                            std::string(cells[date_col]) + "'");
        }
        for (std::size_t i = 0; i < value_cols.size(); ++i) {
            row.values.push_back(parse_value(cells[value_cols[i]], line_no,
                                             schema.value_columns[i]));
        }
        if (agg_col) {
            row.aggregate =
                parse_value(cells[*agg_col], line_no, *schema.aggregate_column);
        }
        rows.push_back(std::move(row));
    }

    std::stable_sort(rows.begin(), rows.end(),
                     [](const Row& a, const Row& b) { return a.date < b.date; });
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].date == rows[i - 1].date) {
            throw Error(ErrorKind::duplicate_date,
                        "date " + rows[i].date.to_iso() + " appears twice");
        }
    }

    Panel panel;
    panel.names = schema.value_columns;
    panel.columns.assign(panel.names.size(), {});
    if (agg_col) panel.aggregate.emplace();
    for (auto& row : rows) {
        panel.dates.push_back(row.date);
        for (std::size_t i = 0; i < row.values.size(); ++i)
            panel.columns[i].push_back(row.values[i]);
        if (agg_col) panel.aggregate->push_back(row.aggregate);
    }
    return panel;
}

std::vector<Violation> validate_panel(const Panel& panel) {
    std::vector<Violation> out;

    for (std::size_t t = 1; t < panel.dates.size(); ++t) {
        if (!(panel.dates[t - 1] < panel.dates[t])) {
            out.push_back({ViolationKind::dates_not_increasing, panel.dates[t],
                           "", 0.0, 0.0,
                           "dates not strictly increasing at " +
                               panel.dates[t].to_iso()});
        }
    }

    for (std::size_t i = 0; i < panel.columns.size(); ++i) {
        const auto& col = panel.columns[i];
        if (col.size() != panel.dates.size()) {
            out.push_back({ViolationKind::length_mismatch, Date{},
                           panel.names[i], static_cast<double>(col.size()),
                           static_cast<double>(panel.dates.size()),
                           "series '" + panel.names[i] +
                               "' length differs from date vector"});
            continue;
        }
        for (std::size_t t = 0; t < col.size(); ++t) {
            if (!std::isfinite(col[t])) {
                out.push_back({ViolationKind::non_finite_value, panel.dates[t],
                               panel.names[i], col[t], 0.0,
                               "non-finite value in '" + panel.names[i] +
                                   "' at " + panel.dates[t].to_iso()});
            } else if (col[t] <= 0.0) {
                out.push_back({ViolationKind::non_positive_value,
                               panel.dates[t], panel.names[i], col[t], 0.0,
                               "non-positive value in '" + panel.names[i] +
                                   "' at " + panel.dates[t].to_iso()});
            }
        }
    }

    if (panel.aggregate) {
        if (panel.aggregate->size() != panel.dates.size()) {
            out.push_back({ViolationKind::length_mismatch, Date{}, "aggregate",
                           static_cast<double>(panel.aggregate->size()),
                           static_cast<double>(panel.dates.size()),
                           "aggregate length differs from date vector"});
        } else {
            auto totals = compute_aggregate(panel);
            for (std::size_t t = 0; t < totals.size(); ++t) {
                double observed = (*panel.aggregate)[t];
                if (std::fabs(observed - totals[t]) > kAggregateTolerance) {
                    out.push_back({ViolationKind::aggregate_mismatch,
                                   panel.dates[t], "aggregate", observed,
                                   totals[t],
                                   "aggregate at " + panel.dates[t].to_iso() +
                                       " differs from row sum"});
                }
            }
        }
    }

    return out;
}

std::vector<double> compute_aggregate(const Panel& panel) {
    std::vector<double> totals(panel.dates.size(), 0.0);
    for (const auto& col : panel.columns) {
        for (std::size_t t = 0; t < totals.size(); ++t) totals[t] += col[t];
    }
    return totals;
}

Panel dedupe_stale_dates(const Panel& panel) {
    Panel out;
    out.names = panel.names;
    out.columns.assign(panel.names.size(), {});
    if (panel.aggregate) out.aggregate.emplace();

    std::size_t last_kept = 0;
    for (std::size_t t = 0; t < panel.dates.size(); ++t) {
        bool keep = t == 0;
        if (!keep) {
            for (const auto& col : panel.columns) {
                if (std::fabs(col[t] - col[last_kept]) >
                    kStaleRowTolerance * std::fabs(col[last_kept])) {
                    keep = true;
                    break;
                }
            }
        }
        if (!keep) continue;
        last_kept = t;
        out.dates.push_back(panel.dates[t]);
        for (std::size_t i = 0; i < panel.columns.size(); ++i)
            out.columns[i].push_back(panel.columns[i][t]);
        if (panel.aggregate) out.aggregate->push_back((*panel.aggregate)[t]);
    }
    return out;
}

std::string panel_to_csv(const Panel& panel, int precision) {
    std::string out = "date";
    for (const auto& name : panel.names) {
        out += ',';
        out += name;
    }
    if (panel.aggregate) out += ",aggregate";
    out += '\n';

    for (std::size_t t = 0; t < panel.dates.size(); ++t) {
        out += panel.dates[t].to_iso();
        for (const auto& col : panel.columns) {
            out += ',';
            append_number(out, col[t], precision);
        }
        if (panel.aggregate) {
            out += ',';
            append_number(out, (*panel.aggregate)[t], precision);
        }
        out += '\n';
    }
    return out;
}

std::string panel_to_json(const Panel& panel) {
    nlohmann::ordered_json j;
    auto& dates = j["dates"] = nlohmann::ordered_json::array();
    for (const auto& d : panel.dates) dates.push_back(d.to_iso());
    auto& series = j["series"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < panel.columns.size(); ++i) {
        series.push_back({{"name", panel.names[i]}, {"values", panel.columns[i]}});
    }
    if (panel.aggregate) j["aggregate"] = *panel.aggregate;
    return j.dump(2);
}

}  // namespace rotorkit
