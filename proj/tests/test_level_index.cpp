#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

#include "rotorkit/errors.hpp"
#include "rotorkit/level_index.hpp"
#include "rotorkit/table2.hpp"

using namespace rotorkit;

namespace {

IndexSeries series_of(std::vector<double> values) {
    IndexSeries s;
    s.name = "X";
    for (std::size_t t = 0; t < values.size(); ++t)
        s.dates.push_back({2023, 1, static_cast<int>(t + 1)});
    s.values = std::move(values);
    return s;
}

}  // namespace

TEST_CASE("minmax: endpoints clamp to the floor and reach 1") {
    NormalizationConfig config;
    config.floor_epsilon = 0.01;
    auto out = minmax_normalize(series_of({1.0, 2.0, 3.0}), config);
    REQUIRE(out.size() == 3);
    CHECK(out[0] == 0.01);
    CHECK(out[1] == 0.5);
    CHECK(out[2] == 1.0);
}

TEST_CASE("minmax: constant series maps to the fallback value") {
    NormalizationConfig config;
    config.constant_series_value = 0.5;
    auto out = minmax_normalize(series_of({5.0, 5.0, 5.0}), config);
    CHECK(out == std::vector<double>{0.5, 0.5, 0.5});
}

TEST_CASE("minmax: empty series and bad configs are rejected") {
    CHECK_THROWS_AS(minmax_normalize(series_of({}), NormalizationConfig{}),
                    Error);
    NormalizationConfig bad;
    bad.floor_epsilon = 0.7;
    CHECK_THROWS_AS(minmax_normalize(series_of({1, 2}), bad), Error);
    bad = NormalizationConfig{};
    bad.constant_series_value = 0.0;
    CHECK_THROWS_AS(minmax_normalize(series_of({1, 2}), bad), Error);
}

TEST_CASE("minmax: SSE column peaks at 1.0 on its maximum date") {
    auto panel = load_table2();
    auto sse = panel.series("SSE");

    // Oracle: independent scan for the column maximum.
    std::size_t arg_max = 0;
    for (std::size_t t = 1; t < sse.values.size(); ++t)
        if (sse.values[t] > sse.values[arg_max]) arg_max = t;
    CHECK(sse.dates[arg_max].to_iso() == "2023-04-07");
    CHECK(sse.values[arg_max] == doctest::Approx(568474.9299).epsilon(1e-12));

    auto out = minmax_normalize(sse, NormalizationConfig{});
    CHECK(out[arg_max] == 1.0);
    for (double u : out) CHECK(u <= 1.0);
}

TEST_CASE("levels: every column floors at its arg-min date") {
    auto panel = load_table2();
    NormalizationConfig config;
    auto levels = compute_level_indices(panel, config);
    for (std::size_t i = 0; i < panel.series_count(); ++i) {
        std::size_t arg_min = 0;
        for (std::size_t t = 1; t < panel.row_count(); ++t)
            if (panel.columns[i][t] < panel.columns[i][arg_min]) arg_min = t;
        CHECK(levels[arg_min].u[i] == config.floor_epsilon);
    }
}

TEST_CASE("levels: one-date panel degenerates to the constant value") {
    Panel p;
    p.dates = {{2023, 1, 2}};
    p.names = {"A", "B"};
    p.columns = {{5.0}, {9.0}};
    NormalizationConfig config;

    for (auto scope :
         {NormalizationScope::per_series, NormalizationScope::pooled}) {
        auto levels = compute_level_indices(p, config, scope);
        REQUIRE(levels.size() == 1);
        CHECK(levels[0].u[0] == config.constant_series_value);
        CHECK(levels[0].u[1] == config.constant_series_value);
    }
}

TEST_CASE("levels: 2023-02-01 row matches a brute-force oracle") {
    auto panel = load_table2();
    NormalizationConfig config;
    auto levels = compute_level_indices(panel, config);
    std::size_t t = panel.date_index(Date{2023, 2, 1});

    // Oracle: direct min-max re-implementation per column.
    for (std::size_t i = 0; i < panel.series_count(); ++i) {
        const auto& col = panel.columns[i];
        double lo = *std::min_element(col.begin(), col.end());
        double hi = *std::max_element(col.begin(), col.end());
        double expect = (col[t] - lo) / (hi - lo);
        expect = std::clamp(expect, config.floor_epsilon, 1.0);
        CHECK(levels[t].u[i] == doctest::Approx(expect).epsilon(1e-15));
    }

    // Frozen values from the same oracle.
    CHECK(levels[t].u[0] == doctest::Approx(0.7339778780951699).epsilon(1e-12));
    CHECK(levels[t].u[1] == doctest::Approx(0.24258903296434903).epsilon(1e-12));
    CHECK(levels[t].u[2] == doctest::Approx(0.9832458093049878).epsilon(1e-12));
    CHECK(levels[t].u[3] == 1.0);
}

TEST_CASE("levels: pooled scope shares one scale across columns") {
    Panel p;
    p.dates = {{2023, 1, 1}, {2023, 1, 2}, {2023, 1, 3}};
    p.names = {"big", "small"};
    p.columns = {{100.0, 150.0, 200.0}, {10.0, 20.0, 30.0}};
    NormalizationConfig config;

    auto pooled = compute_level_indices(p, config, NormalizationScope::pooled);
    // Pool spans [10, 200]: (100-10)/190, (30-10)/190, ...
    CHECK(pooled[0].u[0] == doctest::Approx(90.0 / 190.0));
    CHECK(pooled[2].u[0] == 1.0);
    CHECK(pooled[0].u[1] == 0.01);  // exact minimum clamps to the floor
    CHECK(pooled[2].u[1] == doctest::Approx(20.0 / 190.0));

    auto per = compute_level_indices(p, config, NormalizationScope::per_series);
    CHECK(per[2].u[1] == 1.0);  // own-scale: small column also reaches 1
}

TEST_CASE("minmax: trailing window uses only recent rows") {
    NormalizationConfig config;
    config.window_length = 2;
    auto out = minmax_normalize(series_of({1.0, 2.0, 3.0, 2.5}), config);
    CHECK(out[0] == config.constant_series_value);  // window of one value
    CHECK(out[1] == 1.0);                           // max of {1,2}
    CHECK(out[2] == 1.0);                           // max of {2,3}
    CHECK(out[3] == config.floor_epsilon);          // min of {3,2.5}
}

TEST_CASE("levels: pooled scope with a trailing window") {
    Panel p;
    p.dates = {{2023, 1, 1}, {2023, 1, 2}, {2023, 1, 3}};
    p.names = {"A", "B"};
    p.columns = {{1.0, 2.0, 4.0}, {10.0, 20.0, 40.0}};
    NormalizationConfig config;
    config.window_length = 2;

    auto levels = compute_level_indices(p, config, NormalizationScope::pooled);
    // t=0: both columns constant over the one-row window.
    CHECK(levels[0].u[0] == config.constant_series_value);
    CHECK(levels[0].u[1] == config.constant_series_value);
    // t=1: pool {1,2,10,20}; t=2: pool {2,4,20,40}.
    CHECK(levels[1].u[0] == doctest::Approx(1.0 / 19.0));
    CHECK(levels[1].u[1] == 1.0);
    CHECK(levels[2].u[0] == doctest::Approx(2.0 / 38.0));
    CHECK(levels[2].u[1] == 1.0);
}

TEST_CASE("minmax: monotone and scale invariant, outputs stay in range") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> value(1.0, 1e6);
    std::uniform_real_distribution<double> coeff(0.1, 50.0);
    NormalizationConfig config;

    for (int it = 0; it < 200; ++it) {
        std::size_t len = 2 + rng() % 60;
        std::vector<double> x(len);
        for (auto& v : x) v = value(rng);
        auto out = minmax_normalize(series_of(x), config);

        for (std::size_t a = 0; a < len; ++a) {
            CHECK(out[a] >= config.floor_epsilon);
            CHECK(out[a] <= 1.0);
            for (std::size_t b = a + 1; b < len; ++b) {
                if (x[a] < x[b]) CHECK(out[a] <= out[b]);
            }
        }

        double a = coeff(rng);
        double b = coeff(rng);
        std::vector<double> affine(len);
        for (std::size_t t = 0; t < len; ++t) affine[t] = a * x[t] + b;
        auto out2 = minmax_normalize(series_of(affine), config);
        for (std::size_t t = 0; t < len; ++t)
            CHECK(out2[t] == doctest::Approx(out[t]).epsilon(1e-12));
    }
}
