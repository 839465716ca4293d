#include "rotorkit/level_index.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

#include "rotorkit/errors.hpp"

namespace rotorkit {

namespace {

struct MinMax {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void add(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
};

double scale(double x, const MinMax& mm, const NormalizationConfig& config) {
    if (mm.hi == mm.lo) return config.constant_series_value;
    double u = (x - mm.lo) / (mm.hi - mm.lo);
    return std::clamp(u, config.floor_epsilon, 1.0);
}

}  // namespace

void NormalizationConfig::validate() const {
    if (!(floor_epsilon > 0.0 && floor_epsilon < 0.5)) {
        throw Error(ErrorKind::config_invalid,
                    "floor_epsilon must be in (0, 0.5)");
    }
    if (!(constant_series_value > 0.0 && constant_series_value <= 1.0)) {
        throw Error(ErrorKind::config_invalid,
                    "constant_series_value must be in (0, 1]");
    }
}

std::vector<double> minmax_normalize(const IndexSeries& series,
                                     const NormalizationConfig& config) {
    config.validate();
    if (series.values.empty()) {
        throw Error(ErrorKind::empty_series,
                    "series '" + series.name + "' has no values");
    }

    const auto& x = series.values;
    std::vector<double> out(x.size());

    if (config.window_length == 0) {
        MinMax mm;
        for (double v : x) mm.add(v);
        for (std::size_t t = 0; t < x.size(); ++t) out[t] = scale(x[t], mm, config);
        return out;
    }

    for (std::size_t t = 0; t < x.size(); ++t) {
        std::size_t begin = t + 1 >= config.window_length
                                ? t + 1 - config.window_length
                                : 0;
        MinMax mm;
        for (std::size_t s = begin; s <= t; ++s) mm.add(x[s]);
        out[t] = scale(x[t], mm, config);
    }
    return out;
}

std::vector<LevelIndexVector> compute_level_indices(
    const Panel& panel, const NormalizationConfig& config,
    NormalizationScope scope) {
    config.validate();
    if (panel.row_count() == 0) {
        throw Error(ErrorKind::empty_series, "panel has no rows");
    }

    const std::size_t n = panel.series_count();
    const std::size_t rows = panel.row_count();
    std::vector<std::vector<double>> normalized(n);

    if (scope == NormalizationScope::per_series) {
        for (std::size_t i = 0; i < n; ++i)
            normalized[i] = minmax_normalize(panel.series(i), config);
    } else {
        // One min/max over all member columns per window, so a structurally
        // small subsystem keeps a small level index. A column that never
        // moves inside the window still falls back to the constant value.
        auto column_constant = [&](std::size_t i, std::size_t begin,
                                   std::size_t end) {
            const auto& col = panel.columns[i];
            for (std::size_t s = begin + 1; s <= end; ++s)
                if (col[s] != col[begin]) return false;
            return true;
        };
        for (std::size_t i = 0; i < n; ++i) normalized[i].resize(rows);
        if (config.window_length == 0) {
            MinMax mm;
            for (const auto& col : panel.columns)
                for (double v : col) mm.add(v);
            for (std::size_t i = 0; i < n; ++i) {
                bool constant = column_constant(i, 0, rows - 1);
                for (std::size_t t = 0; t < rows; ++t)
                    normalized[i][t] =
                        constant ? config.constant_series_value
                                 : scale(panel.columns[i][t], mm, config);
            }
        } else {
            for (std::size_t t = 0; t < rows; ++t) {
                std::size_t begin = t + 1 >= config.window_length
                                        ? t + 1 - config.window_length
                                        : 0;
                MinMax mm;
                for (const auto& col : panel.columns)
                    for (std::size_t s = begin; s <= t; ++s) mm.add(col[s]);
                for (std::size_t i = 0; i < n; ++i)
                    normalized[i][t] =
                        column_constant(i, begin, t)
                            ? config.constant_series_value
                            : scale(panel.columns[i][t], mm, config);
            }
        }
    }

    std::vector<LevelIndexVector> out;
    out.reserve(rows);
    for (std::size_t t = 0; t < rows; ++t) {
        LevelIndexVector v;
        v.date = panel.dates[t];
        v.index_names = panel.names;
        v.u.resize(n);
        for (std::size_t i = 0; i < n; ++i) v.u[i] = normalized[i][t];
        out.push_back(std::move(v));
    }
    return out;
}

std::string level_indices_to_csv(const std::vector<LevelIndexVector>& rows,
                                 int precision) {
    std::string out = "date";
    if (!rows.empty()) {
        for (const auto& name : rows.front().index_names) {
            out += ',';
            out += name;
        }
    }
    out += '\n';
    char buf[64];
    for (const auto& row : rows) {
        out += row.date.to_iso();
        for (double u : row.u) {
            std::snprintf(buf, sizeof(buf), ",%.*f", precision, u);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

}  // namespace rotorkit
