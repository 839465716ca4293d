#include "rotorkit/rotation.hpp"

#include <algorithm>
#include <cmath>

#include "rotorkit/errors.hpp"

namespace rotorkit {

namespace {

std::size_t find_date(const std::vector<Date>& dates, const Date& d) {
    auto it = std::lower_bound(dates.begin(), dates.end(), d);
    if (it == dates.end() || *it != d) {
        throw Error(ErrorKind::date_not_found,
                    "date " + d.to_iso() + " not in series");
    }
    return static_cast<std::size_t>(it - dates.begin());
}

std::vector<double> shares_at(const Panel& panel, std::size_t t) {
    double total = 0.0;
    for (const auto& col : panel.columns) total += col[t];
    std::vector<double> out(panel.series_count());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = panel.columns[i][t] / total;
    return out;
}

}  // namespace

void RegimeConfig::validate() const {
    if (!(band_ratio > 1.0)) {
        throw Error(ErrorKind::config_invalid, "band_ratio must exceed 1");
    }
    if (min_window_days < 2) {
        throw Error(ErrorKind::config_invalid, "min_window_days must be >= 2");
    }
}

std::vector<std::vector<double>> market_shares(const Panel& panel) {
    std::vector<std::vector<double>> out;
    out.reserve(panel.row_count());
    for (std::size_t t = 0; t < panel.row_count(); ++t)
        out.push_back(shares_at(panel, t));
    return out;
}

std::vector<RegimeWindow> detect_stock_fund_regime(const Panel& panel,
                                                   const RegimeConfig& config) {
    config.validate();
    auto totals = compute_aggregate(panel);
    const std::size_t n = totals.size();

    std::vector<RegimeWindow> out;
    std::size_t s = 0;
    while (s < n) {
        double lo = totals[s];
        double hi = totals[s];
        std::size_t e = s;
        while (e + 1 < n) {
            double nlo = std::min(lo, totals[e + 1]);
            double nhi = std::max(hi, totals[e + 1]);
            if (nhi / nlo > config.band_ratio) break;
            lo = nlo;
            hi = nhi;
            ++e;
        }
        if (e - s + 1 >= config.min_window_days) {
            out.push_back({panel.dates[s], panel.dates[e], e - s + 1, hi / lo});
            s = e + 1;
        } else {
            ++s;
        }
    }
    return out;
}

double window_return(const IndexSeries& series, const Date& start,
                     const Date& end) {
    std::size_t a = find_date(series.dates, start);
    std::size_t b = find_date(series.dates, end);
    if (!(start < end)) {
        throw Error(ErrorKind::invalid_window,
                    "window start " + start.to_iso() + " not before end " +
                        end.to_iso());
    }
    return (series.values[b] - series.values[a]) / series.values[a];
}

std::vector<RotationEpisode> detect_rotation_episodes(
    const Panel& panel, const std::vector<DateWindow>& windows,
    double share_threshold) {
    if (!(share_threshold > 0.0)) {
        throw Error(ErrorKind::config_invalid,
                    "share_threshold must be positive");
    }

    std::vector<RotationEpisode> out;
    for (const auto& w : windows) {
        if (!(w.start < w.end)) {
            throw Error(ErrorKind::invalid_window,
                        "window start " + w.start.to_iso() +
                            " not before end " + w.end.to_iso());
        }
        std::size_t a = panel.date_index(w.start);
        std::size_t b = panel.date_index(w.end);
        auto sa = shares_at(panel, a);
        auto sb = shares_at(panel, b);

        RotationEpisode ep;
        ep.start = w.start;
        ep.end = w.end;
        ep.index_names = panel.names;
        ep.share_delta.resize(sa.size());
        for (std::size_t i = 0; i < sa.size(); ++i) {
            ep.share_delta[i] = sb[i] - sa[i];
            if (ep.share_delta[i] < -share_threshold)
                ep.donors.push_back(panel.names[i]);
            else if (ep.share_delta[i] > share_threshold)
                ep.recipients.push_back(panel.names[i]);
        }
        if (!ep.donors.empty() || !ep.recipients.empty())
            out.push_back(std::move(ep));
    }
    return out;
}

DateWindow peak_share_window(const Panel& panel, std::string_view name,
                             const DateWindow& within) {
    std::size_t col = panel.series_index(name);
    std::size_t a = panel.date_index(within.start);
    std::size_t b = panel.date_index(within.end);
    if (a >= b) {
        throw Error(ErrorKind::invalid_window, "degenerate window");
    }

    std::size_t arg_min = a;
    std::size_t arg_max = a;
    double lo = 0.0, hi = 0.0;
    for (std::size_t t = a; t <= b; ++t) {
        auto s = shares_at(panel, t);
        if (t == a) {
            lo = hi = s[col];
            continue;
        }
        if (s[col] < lo) { lo = s[col]; arg_min = t; }
        if (s[col] > hi) { hi = s[col]; arg_max = t; }
    }
    std::size_t first = std::min(arg_min, arg_max);
    std::size_t last = std::max(arg_min, arg_max);
    return {panel.dates[first], panel.dates[last]};
}

double change_comovement(const IndexSeries& a, const IndexSeries& b,
                         const Date& start, const Date& end) {
    if (!(start < end)) {
        throw Error(ErrorKind::invalid_window,
                    "window start not before end");
    }

    // Align on shared dates inside the window.
    std::vector<double> xa, xb;
    std::size_t i = 0, j = 0;
    while (i < a.dates.size() && j < b.dates.size()) {
        if (a.dates[i] < b.dates[j]) { ++i; continue; }
        if (b.dates[j] < a.dates[i]) { ++j; continue; }
        if (!(a.dates[i] < start) && !(end < a.dates[i])) {
            xa.push_back(a.values[i]);
            xb.push_back(b.values[j]);
        }
        ++i;
        ++j;
    }
    if (xa.size() < 3) {
        throw Error(ErrorKind::insufficient_data,
                    "fewer than 3 shared dates in window");
    }

    std::vector<double> da(xa.size() - 1), db(xb.size() - 1);
    for (std::size_t k = 0; k + 1 < xa.size(); ++k) {
        da[k] = xa[k + 1] - xa[k];
        db[k] = xb[k + 1] - xb[k];
    }

    auto constant = [](const std::vector<double>& v) {
        auto [lo, hi] = std::minmax_element(v.begin(), v.end());
        return *lo == *hi;
    };
    if (constant(da) || constant(db)) {
        throw Error(ErrorKind::zero_variance,
                    "difference series is constant over the window");
    }

    const double n = static_cast<double>(da.size());
    double ma = 0.0, mb = 0.0;
    for (std::size_t k = 0; k < da.size(); ++k) { ma += da[k]; mb += db[k]; }
    ma /= n;
    mb /= n;
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t k = 0; k < da.size(); ++k) {
        sab += (da[k] - ma) * (db[k] - mb);
        saa += (da[k] - ma) * (da[k] - ma);
        sbb += (db[k] - mb) * (db[k] - mb);
    }
    return sab / std::sqrt(saa * sbb);
}

}  // namespace rotorkit
