#pragma once

#include <map>
#include <string>
#include <vector>

#include "rotorkit/panel.hpp"

namespace rotorkit {

enum class GraPreprocessing { initial_value, mean_value, min_max, none };

struct GraConfig {
    double rho = 0.5;  // resolution coefficient, in (0, 1]
    GraPreprocessing preprocessing = GraPreprocessing::initial_value;

    void validate() const;  // throws Error{config_invalid}
};

struct GraResult {
    std::string parent;
    std::vector<std::string> children;
    // coefficients[i][k]: per-date relational coefficient of child i.
    std::vector<std::vector<double>> coefficients;
    // grades[i] = mean over dates of coefficients[i], in (0, 1].
    std::vector<double> grades;

    std::map<std::string, double> grade_map() const;
};

// Relational coefficients of each child against the parent. Both sequences
// are preprocessed, then xi(k) = (dmin + rho*dmax) / (delta(k) + rho*dmax)
// with dmin/dmax pooled over every child and every date. A batch where all
// deltas vanish yields coefficients of 1: identical sequences are maximally
// related. Throws Error{length_mismatch | insufficient_data |
// degenerate_sequence}.
std::vector<std::vector<double>> gra_coefficients(
    const IndexSeries& parent, const std::vector<IndexSeries>& children,
    const GraConfig& config);

// Single-child convenience: a batch of one.
std::vector<double> gra_coefficients(const IndexSeries& parent,
                                     const IndexSeries& child,
                                     const GraConfig& config);

// Grades of every non-parent panel series against `parent`.
// Throws Error{unknown_parent | insufficient_data}.
GraResult gra_grades(const Panel& panel, std::string_view parent,
                     const GraConfig& config);

std::string gra_coefficients_to_csv(const GraResult& result,
                                    const std::vector<Date>& dates,
                                    int precision = 6);

}  // namespace rotorkit
