#include "rotorkit/grey_relation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

#include "rotorkit/errors.hpp"

namespace rotorkit {

namespace {

std::vector<double> preprocess(const std::vector<double>& x,
                               GraPreprocessing mode,
                               const std::string& name) {
    std::vector<double> out(x.size());
    switch (mode) {
        case GraPreprocessing::none:
            return x;
        case GraPreprocessing::initial_value: {
            if (x.front() == 0.0) {
                throw Error(ErrorKind::degenerate_sequence,
                            "series '" + name + "' starts at zero");
            }
            for (std::size_t k = 0; k < x.size(); ++k) out[k] = x[k] / x.front();
            return out;
        }
        case GraPreprocessing::mean_value: {
            double mean = std::accumulate(x.begin(), x.end(), 0.0) /
                          static_cast<double>(x.size());
            if (mean == 0.0) {
                throw Error(ErrorKind::degenerate_sequence,
                            "series '" + name + "' has zero mean");
            }
            for (std::size_t k = 0; k < x.size(); ++k) out[k] = x[k] / mean;
            return out;
        }
        case GraPreprocessing::min_max: {
            auto [lo, hi] = std::minmax_element(x.begin(), x.end());
            if (*hi == *lo) {
                std::fill(out.begin(), out.end(), 0.5);
                return out;
            }
            for (std::size_t k = 0; k < x.size(); ++k)
                out[k] = (x[k] - *lo) / (*hi - *lo);
            return out;
        }
    }
    return out;
}

}  // namespace

void GraConfig::validate() const {
    if (!(rho > 0.0 && rho <= 1.0)) {
        throw Error(ErrorKind::config_invalid, "rho must be in (0, 1]");
    }
}

std::map<std::string, double> GraResult::grade_map() const {
    std::map<std::string, double> out;
    for (std::size_t i = 0; i < children.size(); ++i) out[children[i]] = grades[i];
    return out;
}

std::vector<std::vector<double>> gra_coefficients(
    const IndexSeries& parent, const std::vector<IndexSeries>& children,
    const GraConfig& config) {
    config.validate();
    if (parent.values.size() < 2) {
        throw Error(ErrorKind::insufficient_data,
                    "parent sequence needs at least 2 points");
    }
    if (children.empty()) {
        throw Error(ErrorKind::insufficient_data, "no child sequences");
    }
    for (const auto& child : children) {
        if (child.values.size() != parent.values.size()) {
            throw Error(ErrorKind::length_mismatch,
                        "child '" + child.name + "' length " +
                            std::to_string(child.values.size()) +
                            " != parent length " +
                            std::to_string(parent.values.size()));
        }
    }

    const std::size_t m = parent.values.size();
    auto p = preprocess(parent.values, config.preprocessing, parent.name);

    // Absolute gaps per child, with batch-pooled extrema.
    std::vector<std::vector<double>> deltas(children.size());
    double dmin = std::numeric_limits<double>::infinity();
    double dmax = 0.0;
    for (std::size_t i = 0; i < children.size(); ++i) {
        auto c = preprocess(children[i].values, config.preprocessing,
                            children[i].name);
        deltas[i].resize(m);
        for (std::size_t k = 0; k < m; ++k) {
            double d = std::fabs(p[k] - c[k]);
            deltas[i][k] = d;
            dmin = std::min(dmin, d);
            dmax = std::max(dmax, d);
        }
    }

    std::vector<std::vector<double>> xi(children.size(),
                                        std::vector<double>(m, 1.0));
    if (dmax == 0.0) return xi;  // every child matches the parent exactly

    for (std::size_t i = 0; i < children.size(); ++i) {
        for (std::size_t k = 0; k < m; ++k) {
            xi[i][k] = (dmin + config.rho * dmax) /
                       (deltas[i][k] + config.rho * dmax);
        }
    }
    return xi;
}

std::vector<double> gra_coefficients(const IndexSeries& parent,
                                     const IndexSeries& child,
                                     const GraConfig& config) {
    return gra_coefficients(parent, std::vector<IndexSeries>{child}, config)
        .front();
}

GraResult gra_grades(const Panel& panel, std::string_view parent,
                     const GraConfig& config) {
    if (!panel.has_series(parent)) {
        throw Error(ErrorKind::unknown_parent,
                    "parent series '" + std::string(parent) + "' not in panel");
    }

    GraResult result;
    result.parent = std::string(parent);
    std::vector<IndexSeries> children;
    for (const auto& name : panel.names) {
        if (name == parent) continue;
        result.children.push_back(name);
        children.push_back(panel.series(name));
    }
    if (children.empty()) {
        throw Error(ErrorKind::insufficient_data,
                    "panel has no series besides the parent");
    }

    result.coefficients =
        gra_coefficients(panel.series(parent), children, config);
    for (const auto& xi : result.coefficients) {
        result.grades.push_back(std::accumulate(xi.begin(), xi.end(), 0.0) /
                                static_cast<double>(xi.size()));
    }
    return result;
}

std::string gra_coefficients_to_csv(const GraResult& result,
                                    const std::vector<Date>& dates,
                                    int precision) {
    std::string out = "date";
    for (const auto& name : result.children) {
        out += ',';
        out += name;
    }
    out += '\n';
    char buf[64];
    for (std::size_t k = 0; k < dates.size(); ++k) {
        out += dates[k].to_iso();
        for (const auto& xi : result.coefficients) {
            std::snprintf(buf, sizeof(buf), ",%.*f", precision, xi[k]);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

}  // namespace rotorkit
