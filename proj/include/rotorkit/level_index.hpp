#pragma once

#include <string>
#include <vector>

#include "rotorkit/panel.hpp"

namespace rotorkit {

// How the min/max window is pooled when normalizing a panel.
//   per_series: each column is scaled by its own min/max (index trends).
//   pooled:     all member columns share one min/max, so level indices stay
//               comparable across subsystems (coupling input).
enum class NormalizationScope { per_series, pooled };

struct NormalizationConfig {
    // Raw min-max sends each window minimum to exactly 0, which collapses the
    // coupling product; a small floor keeps downstream degrees nonzero.
    double floor_epsilon = 0.01;
    // A constant window carries no ordering information; midpoint fallback.
    double constant_series_value = 0.5;
    // 0 = whole series; otherwise a trailing window of this many rows.
    std::size_t window_length = 0;

    // Throws Error{config_invalid} unless 0 < floor_epsilon < 0.5 and
    // 0 < constant_series_value <= 1.
    void validate() const;
};

// Per-date vector of level indices, aligned with index_names.
struct LevelIndexVector {
    Date date;
    std::vector<std::string> index_names;
    std::vector<double> u;
};

// out[t] = (x[t] - min) / (max - min) over the window, clamped to
// [floor_epsilon, 1]; constant windows map to constant_series_value.
// Throws Error{empty_series}.
std::vector<double> minmax_normalize(const IndexSeries& series,
                                     const NormalizationConfig& config);

// One LevelIndexVector per panel date, columns in panel order.
std::vector<LevelIndexVector> compute_level_indices(
    const Panel& panel, const NormalizationConfig& config,
    NormalizationScope scope = NormalizationScope::per_series);

std::string level_indices_to_csv(const std::vector<LevelIndexVector>& rows,
                                 int precision = 6);

}  // namespace rotorkit
