#pragma once

#include <string>
#include <vector>

#include "rotorkit/level_index.hpp"
#include "rotorkit/panel.hpp"

namespace rotorkit {

// Non-negative coefficients summing to 1 (within 1e-12).
struct Weights {
    std::vector<double> w;

    static Weights equal(std::size_t n);
    // Throws Error{config_invalid} on negative entries or bad sum.
    void validate() const;
    std::size_t size() const { return w.size(); }
};

enum class StageKind { coupling, coordination };

struct StageLabel {
    StageKind kind;
    std::string name;
    double lower = 0.0;  // exclusive
    double upper = 0.0;  // inclusive
    bool degenerate = false;
};

struct CoordinationPoint {
    Date date;
    double c = 0.0;
    double t = 0.0;
    double d = 0.0;
    std::string c_stage;
    std::string d_stage;
};

// C = n * (prod u)^(1/n) / (sum u), the n-subsystem balance degree in [0,1].
// C = 1 iff all inputs are equal and positive; any zero input gives C = 0.
// Throws Error{dimension_too_small} for n < 2, Error{out_of_range_input}
// for components outside [0,1].
double coupling_degree(const std::vector<double>& u);

// T = sum w_i * u_i. Throws Error{length_mismatch}.
double composite_level(const std::vector<double>& u, const Weights& weights);

// D = sqrt(c * t). Throws Error{out_of_range_input}.
double coordination_degree(double c, double t);

// Half-open stage bands: (0,0.3] initial, (0.3,0.5] low-level,
// (0.5,0.8] intermediate, (0.8,1] advanced. Zero maps to a distinguished
// degenerate label. Throws Error{out_of_range_input} outside [0,1].
StageLabel classify_stage(double value, StageKind kind);

// Per-date (C, T, D) with stage labels for a member subset of the panel.
// Level indices are min-max normalized with a min/max pooled across the
// member columns, so the degrees reflect level gaps between subsystems.
// Throws Error{unknown_member | dimension_too_small | length_mismatch}.
std::vector<CoordinationPoint> coordination_series(
    const Panel& panel, const std::vector<std::string>& members,
    const NormalizationConfig& config, const Weights& weights);

std::string coordination_to_csv(const std::vector<CoordinationPoint>& points,
                                int precision = 6);

}  // namespace rotorkit
