#include "rotorkit/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "rotorkit/errors.hpp"

namespace rotorkit {

namespace {

constexpr double kWeightSumTolerance = 1e-12;

void check_unit_range(const std::vector<double>& u) {
    for (double v : u) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw Error(ErrorKind::out_of_range_input,
                        "level index " + std::to_string(v) +
                            " outside [0, 1]");
        }
    }
}

const StageLabel kCouplingStages[] = {
    {StageKind::coupling, "Initial coupling stage", 0.0, 0.3, false},
    {StageKind::coupling, "Low-level coupling stage", 0.3, 0.5, false},
    {StageKind::coupling, "Intermediate coupling stage", 0.5, 0.8, false},
    {StageKind::coupling, "Advanced coupling stage", 0.8, 1.0, false},
};

const StageLabel kCoordinationStages[] = {
    {StageKind::coordination, "Initial coordination stage", 0.0, 0.3, false},
    {StageKind::coordination, "Low-level coordination stage", 0.3, 0.5, false},
    {StageKind::coordination, "Intermediate coordination stage", 0.5, 0.8, false},
    {StageKind::coordination, "Advanced coordination stage", 0.8, 1.0, false},
};

}  // namespace

Weights Weights::equal(std::size_t n) {
    Weights w;
    w.w.assign(n, 1.0 / static_cast<double>(n));
    return w;
}

void Weights::validate() const {
    double sum = 0.0;
    for (double v : w) {
        if (v < 0.0) {
            throw Error(ErrorKind::config_invalid, "negative weight");
        }
        sum += v;
    }
    if (std::fabs(sum - 1.0) > kWeightSumTolerance) {
        throw Error(ErrorKind::config_invalid,
                    "weights sum to " + std::to_string(sum) + ", expected 1");
    }
}

double coupling_degree(const std::vector<double>& u) {
    if (u.size() < 2) {
        throw Error(ErrorKind::dimension_too_small,
                    "coupling degree needs at least 2 subsystems");
    }
    check_unit_range(u);

    double sum = 0.0;
    double log_sum = 0.0;
    bool has_zero = false;
    for (double v : u) {
        sum += v;
        if (v == 0.0) has_zero = true;
        else log_sum += std::log(v);
    }
    if (has_zero || sum == 0.0) return 0.0;

    // exp(mean(log u)) keeps the geometric mean stable for small components.
    const double n = static_cast<double>(u.size());
    double geometric = std::exp(log_sum / n);
    double c = n * geometric / sum;
    return std::min(c, 1.0);
}

double composite_level(const std::vector<double>& u, const Weights& weights) {
    if (u.size() != weights.size()) {
        throw Error(ErrorKind::length_mismatch,
                    "level vector and weights differ in length");
    }
    weights.validate();
    check_unit_range(u);
    double t = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) t += weights.w[i] * u[i];
    return std::clamp(t, 0.0, 1.0);
}

double coordination_degree(double c, double t) {
    if (!(c >= 0.0 && c <= 1.0) || !(t >= 0.0 && t <= 1.0)) {
        throw Error(ErrorKind::out_of_range_input,
                    "coupling and composite level must be in [0, 1]");
    }
    return std::sqrt(c * t);
}

StageLabel classify_stage(double value, StageKind kind) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw Error(ErrorKind::out_of_range_input,
                    "stage value " + std::to_string(value) + " outside [0, 1]");
    }
    if (value == 0.0) {
        return StageLabel{kind, "Degenerate", 0.0, 0.0, true};
    }
    const auto* stages =
        kind == StageKind::coupling ? kCouplingStages : kCoordinationStages;
    for (int i = 0; i < 4; ++i) {
        if (value > stages[i].lower && value <= stages[i].upper)
            return stages[i];
    }
    return stages[3];  // unreachable for value in (0, 1]
}

std::vector<CoordinationPoint> coordination_series(
    const Panel& panel, const std::vector<std::string>& members,
    const NormalizationConfig& config, const Weights& weights) {
    if (members.size() < 2) {
        throw Error(ErrorKind::dimension_too_small,
                    "coordination series needs at least 2 members");
    }

    Panel restricted;
    restricted.dates = panel.dates;
    for (const auto& name : members) {
        restricted.names.push_back(name);
        restricted.columns.push_back(panel.columns[panel.series_index(name)]);
    }

    auto levels = compute_level_indices(restricted, config,
                                        NormalizationScope::pooled);

    std::vector<CoordinationPoint> out;
    out.reserve(levels.size());
    for (const auto& lv : levels) {
        CoordinationPoint p;
        p.date = lv.date;
        p.c = coupling_degree(lv.u);
        p.t = composite_level(lv.u, weights);
        p.d = coordination_degree(p.c, p.t);
        p.c_stage = classify_stage(p.c, StageKind::coupling).name;
        p.d_stage = classify_stage(p.d, StageKind::coordination).name;
        out.push_back(std::move(p));
    }
    return out;
}

std::string coordination_to_csv(const std::vector<CoordinationPoint>& points,
                                int precision) {
    std::string out = "date,c,t,d,c_stage,d_stage\n";
    char buf[128];
    for (const auto& p : points) {
        out += p.date.to_iso();
        std::snprintf(buf, sizeof(buf), ",%.*f,%.*f,%.*f,", precision, p.c,
                      precision, p.t, precision, p.d);
        out += buf;
        out += p.c_stage;
        out += ',';
        out += p.d_stage;
        out += '\n';
    }
    return out;
}

}  // namespace rotorkit
