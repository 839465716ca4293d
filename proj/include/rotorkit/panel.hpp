#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rotorkit/date.hpp"

namespace rotorkit {

// One named index's dated gross-market-value series (RMB 100-million units).
struct IndexSeries {
    std::string name;
    std::vector<Date> dates;
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
};

// Date-aligned collection of index series plus an optional aggregate column.
// The struct itself permits invalid states (negative values, disordered
// dates); validate_panel reports them as data.
struct Panel {
    std::vector<Date> dates;
    std::vector<std::string> names;
    std::vector<std::vector<double>> columns;  // columns[i][t], aligned with names
    std::optional<std::vector<double>> aggregate;

    std::size_t row_count() const { return dates.size(); }
    std::size_t series_count() const { return columns.size(); }

    bool has_series(std::string_view name) const;
    // Throws Error{unknown_member} when the name is absent.
    std::size_t series_index(std::string_view name) const;
    IndexSeries series(std::size_t i) const;
    IndexSeries series(std::string_view name) const;
    // Throws Error{date_not_found}.
    std::size_t date_index(const Date& d) const;
};

// Column-name mapping for parse_panel.
struct PanelSchema {
    std::string date_column = "date";
    std::vector<std::string> value_columns;
    std::optional<std::string> aggregate_column;
};

// Absolute tolerance for aggregate-vs-sum checks; the source data carries
// four decimal places.
inline constexpr double kAggregateTolerance = 1e-4;
// Relative tolerance under which consecutive rows count as stale repeats.
inline constexpr double kStaleRowTolerance = 1e-6;

// Parses a comma-separated UTF-8 panel with a header row. Rows are re-sorted
// by date; unknown extra columns are skipped with a warning. Throws
// Error{malformed_row | duplicate_date | column_missing}.
Panel parse_panel(std::string_view csv_text, const PanelSchema& schema,
                  std::vector<std::string>* warnings = nullptr);

enum class ViolationKind {
    non_positive_value,
    non_finite_value,
    dates_not_increasing,
    length_mismatch,
    aggregate_mismatch,
};

struct Violation {
    ViolationKind kind;
    Date date;
    std::string column;
    double observed = 0.0;
    double expected = 0.0;
    std::string message;
};

// Empty report iff the panel invariants hold. Violations are data, not errors.
std::vector<Violation> validate_panel(const Panel& panel);

// totals[t] = sum over series of values[t].
std::vector<double> compute_aggregate(const Panel& panel);

// Drops rows whose every series value is within relative 1e-6 of the last
// surviving row; the first row is always kept. Idempotent.
Panel dedupe_stale_dates(const Panel& panel);

// Canonical serialization: ISO dates, fixed `precision` decimals.
std::string panel_to_csv(const Panel& panel, int precision = 6);
std::string panel_to_json(const Panel& panel);

}  // namespace rotorkit
