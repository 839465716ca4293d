#pragma once

#include <map>
#include <string>
#include <vector>

#include "rotorkit/panel.hpp"

namespace rotorkit {

struct RegimeConfig {
    // A window counts as a stable capital pool while max/min of the
    // aggregate stays at or below this ratio.
    double band_ratio = 1.05;
    std::size_t min_window_days = 5;

    void validate() const;  // throws Error{config_invalid}
};

struct DateWindow {
    Date start;
    Date end;
};

struct RegimeWindow {
    Date start;
    Date end;
    std::size_t length = 0;
    double max_min_ratio = 1.0;
};

// A window where aggregate shares shifted from donor indices to recipients.
struct RotationEpisode {
    Date start;
    Date end;
    std::vector<std::string> index_names;
    std::vector<double> share_delta;  // signed, sums to 0
    std::vector<std::string> donors;      // share_delta < -threshold
    std::vector<std::string> recipients;  // share_delta > +threshold
};

// share_i[t] = value_i[t] / sum_j value_j[t]; rows sum to 1.
std::vector<std::vector<double>> market_shares(const Panel& panel);

// Maximal non-overlapping chronological windows of length >=
// min_window_days whose aggregate max/min ratio stays within band_ratio.
std::vector<RegimeWindow> detect_stock_fund_regime(const Panel& panel,
                                                   const RegimeConfig& config);

// (x[end] - x[start]) / x[start]. Throws Error{date_not_found |
// invalid_window}.
double window_return(const IndexSeries& series, const Date& start,
                     const Date& end);

// Endpoint-based share deltas inside each window; windows where no index
// clears the threshold are dropped.
std::vector<RotationEpisode> detect_rotation_episodes(
    const Panel& panel, const std::vector<DateWindow>& windows,
    double share_threshold = 0.005);

inline std::vector<DateWindow> to_date_windows(
    const std::vector<RegimeWindow>& regimes) {
    std::vector<DateWindow> out;
    out.reserve(regimes.size());
    for (const auto& r : regimes) out.push_back({r.start, r.end});
    return out;
}

// The sub-window of a regime window over which `name`'s aggregate share
// swings the most: from its share minimum to its share maximum (or the
// reverse, whichever comes first chronologically).
DateWindow peak_share_window(const Panel& panel, std::string_view name,
                             const DateWindow& within);

// Pearson correlation of day-over-day differences of both series over the
// shared dates in [start, end]. Throws Error{insufficient_data |
// zero_variance | length_mismatch}.
double change_comovement(const IndexSeries& a, const IndexSeries& b,
                         const Date& start, const Date& end);

}  // namespace rotorkit
