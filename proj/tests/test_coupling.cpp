#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "rotorkit/coupling.hpp"
#include "rotorkit/errors.hpp"
#include "rotorkit/table2.hpp"

using namespace rotorkit;

namespace {

// Long-double evaluation through pow, independent of the exp/log route the
// implementation takes.
double coupling_oracle(const std::vector<double>& u) {
    long double prod = 1.0L;
    long double sum = 0.0L;
    for (double v : u) {
        prod *= static_cast<long double>(v);
        sum += static_cast<long double>(v);
    }
    if (sum == 0.0L || prod == 0.0L) return 0.0;
    long double n = static_cast<long double>(u.size());
    return static_cast<double>(n * std::pow(prod, 1.0L / n) / sum);
}

}  // namespace

TEST_CASE("coupling: equal positive vectors give exactly 1") {
    for (double v : {0.7, 0.01, 1.0, 0.3333333}) {
        for (std::size_t n : {2u, 3u, 4u, 7u}) {
            std::vector<double> u(n, v);
            CHECK(coupling_degree(u) == doctest::Approx(1.0).epsilon(1e-13));
            CHECK(coupling_degree(u) <= 1.0);
        }
    }
}

TEST_CASE("coupling: a zero component annihilates the product") {
    CHECK(coupling_degree({0.5, 0.0, 0.5, 0.5}) == 0.0);
    CHECK(coupling_degree({0.0, 0.0}) == 0.0);
}

TEST_CASE("coupling: (0.2,0.4,0.6,0.8) matches the high-precision oracle") {
    std::vector<double> u{0.2, 0.4, 0.6, 0.8};
    double c = coupling_degree(u);
    CHECK(std::fabs(c - 0.885346) <= 1e-6);
    CHECK(c == doctest::Approx(coupling_oracle(u)).epsilon(1e-12));
    CHECK(c == doctest::Approx(0.88534553576025727).epsilon(1e-12));
}

TEST_CASE("coupling: dimension and range guards") {
    CHECK_THROWS_AS(coupling_degree({0.5}), Error);
    try {
        coupling_degree({0.5});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::dimension_too_small);
    }
    CHECK_THROWS_AS(coupling_degree({0.5, 1.2}), Error);
    CHECK_THROWS_AS(coupling_degree({-0.1, 0.5}), Error);
}

TEST_CASE("composite level: weighted mean basics") {
    auto w4 = Weights::equal(4);
    CHECK(composite_level({0.2, 0.4, 0.6, 0.8}, w4) ==
          doctest::Approx(0.5).epsilon(1e-13));
    Weights asymmetric{{0.1, 0.2, 0.3, 0.4}};
    CHECK(composite_level({1, 1, 1, 1}, asymmetric) ==
          doctest::Approx(1.0).epsilon(1e-13));
    CHECK(composite_level({0, 0, 0, 0}, w4) == 0.0);
    CHECK_THROWS_AS(composite_level({0.5, 0.5}, w4), Error);
}

TEST_CASE("weights: validation") {
    CHECK_NOTHROW(Weights::equal(3).validate());
    Weights over_unit{{0.5, 0.6}};
    CHECK_THROWS_AS(over_unit.validate(), Error);
    Weights negative{{-0.5, 1.5}};
    CHECK_THROWS_AS(negative.validate(), Error);
}

TEST_CASE("coordination degree: square root of the product") {
    CHECK(coordination_degree(1.0, 1.0) == 1.0);
    CHECK(coordination_degree(0.0, 0.9) == 0.0);
    CHECK(coordination_degree(0.885346, 0.5) ==
          doctest::Approx(0.66533675683821948).epsilon(1e-12));
    CHECK(std::fabs(coordination_degree(0.885346, 0.5) - 0.66534) < 1e-5);
    CHECK_THROWS_AS(coordination_degree(1.3, 0.5), Error);
}

TEST_CASE("stages: interval bounds straight from the band table") {
    CHECK(classify_stage(0.41, StageKind::coordination).name ==
          "Low-level coordination stage");
    CHECK(classify_stage(0.8, StageKind::coupling).name ==
          "Intermediate coupling stage");
    CHECK(classify_stage(0.3, StageKind::coupling).name ==
          "Initial coupling stage");
    CHECK(classify_stage(0.5, StageKind::coordination).name ==
          "Low-level coordination stage");
    CHECK(classify_stage(1.0, StageKind::coupling).name ==
          "Advanced coupling stage");
    CHECK(classify_stage(0.0, StageKind::coordination).degenerate);
    CHECK(classify_stage(0.0, StageKind::coordination).name == "Degenerate");
    CHECK_THROWS_AS(classify_stage(1.01, StageKind::coupling), Error);
    CHECK_THROWS_AS(classify_stage(-0.2, StageKind::coordination), Error);
}

TEST_CASE("stages: the four bands partition (0,1]") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dist(1e-9, 1.0);
    struct Band { double lo, hi; };
    const Band bands[] = {{0.0, 0.3}, {0.3, 0.5}, {0.5, 0.8}, {0.8, 1.0}};
    for (int it = 0; it < 2000; ++it) {
        double v = dist(rng);
        int hits = 0;
        for (const auto& b : bands)
            if (v > b.lo && v <= b.hi) ++hits;
        CHECK(hits == 1);
        auto label = classify_stage(v, StageKind::coupling);
        CHECK(v > label.lower);
        CHECK(v <= label.upper);
    }
}

TEST_CASE("coupling properties: AM-GM bound, permutation and scale freedom") {
    std::mt19937 rng(20230407);
    std::uniform_real_distribution<double> dist(1e-4, 1.0);
    for (int it = 0; it < 2000; ++it) {
        std::size_t n = 2 + rng() % 6;
        std::vector<double> u(n);
        for (auto& v : u) v = dist(rng);

        double c = coupling_degree(u);
        CHECK(c > 0.0);
        CHECK(c <= 1.0);

        // Strict inequality when the spread is meaningful.
        auto [lo, hi] = std::minmax_element(u.begin(), u.end());
        if (*hi / *lo > 1.01) CHECK(c < 1.0 - 1e-9);

        std::vector<double> perm = u;
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(std::fabs(coupling_degree(perm) - c) <= 1e-12);

        double k = std::uniform_real_distribution<double>(0.05, 1.0 / *hi)(rng);
        std::vector<double> scaled(n);
        for (std::size_t i = 0; i < n; ++i) scaled[i] = k * u[i];
        CHECK(std::fabs(coupling_degree(scaled) - c) <= 1e-12);
    }
}

TEST_CASE("coupling properties: D^2 = C*T and monotonicity") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    for (int it = 0; it < 2000; ++it) {
        double c = dist(rng);
        double t = dist(rng);
        double d = coordination_degree(c, t);
        CHECK(std::fabs(d * d - c * t) <= 1e-12);
        // non-decreasing in each argument
        CHECK(coordination_degree(std::min(1.0, c + 0.1), t) >= d);
        CHECK(coordination_degree(c, std::min(1.0, t + 0.1)) >= d);
    }
}

TEST_CASE("coordination series: single-date panel is fully coordinated") {
    Panel p;
    p.dates = {{2023, 3, 1}};
    p.names = {"A", "B"};
    p.columns = {{10.0}, {70.0}};
    NormalizationConfig config;
    auto points = coordination_series(p, {"A", "B"}, config, Weights::equal(2));
    REQUIRE(points.size() == 1);
    CHECK(points[0].c == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(points[0].t == doctest::Approx(config.constant_series_value));
}

TEST_CASE("coordination series: pairwise SSE/STAR50 matches the pipeline oracle") {
    auto panel = load_table2();
    NormalizationConfig config;
    auto points = coordination_series(panel, {"SSE", "STAR50"}, config,
                                      Weights::equal(2));
    REQUIRE(points.size() == panel.row_count());

    // Oracle: independent pipeline re-implementation with direct loops.
    const auto& sse = panel.columns[panel.series_index("SSE")];
    const auto& star = panel.columns[panel.series_index("STAR50")];
    double lo = sse[0], hi = sse[0];
    for (double v : sse) { lo = std::min(lo, v); hi = std::max(hi, v); }
    for (double v : star) { lo = std::min(lo, v); hi = std::max(hi, v); }
    for (std::size_t t = 0; t < points.size(); ++t) {
        double u1 = std::clamp((sse[t] - lo) / (hi - lo), 0.01, 1.0);
        double u2 = std::clamp((star[t] - lo) / (hi - lo), 0.01, 1.0);
        double c = 2.0 * std::sqrt(u1 * u2) / (u1 + u2);
        double tt = 0.5 * u1 + 0.5 * u2;
        double d = std::sqrt(c * tt);
        CHECK(points[t].c == doctest::Approx(c).epsilon(1e-12));
        CHECK(points[t].d == doctest::Approx(d).epsilon(1e-12));
    }

    // Frozen early-April values, inside the low-level coordination band.
    auto at = [&](int m, int d) { return points[panel.date_index({2023, m, d})]; };
    CHECK(at(4, 3).d == doctest::Approx(0.3151551809924936).epsilon(1e-9));
    CHECK(at(4, 4).d == doctest::Approx(0.3157710787806259).epsilon(1e-9));
    CHECK(at(4, 5).d == doctest::Approx(0.3157730222612678).epsilon(1e-9));
    CHECK(at(4, 6).d == doctest::Approx(0.3179856674605718).epsilon(1e-9));
    CHECK(at(4, 7).d == doctest::Approx(0.3236370348008716).epsilon(1e-9));
    for (int day = 3; day <= 7; ++day) {
        CHECK(at(4, day).d > 0.3);
        CHECK(at(4, day).d <= 0.5);
        CHECK(at(4, day).d_stage == "Low-level coordination stage");
    }
}

TEST_CASE("coordination series: guards") {
    auto panel = load_table2();
    NormalizationConfig config;
    CHECK_THROWS_AS(
        coordination_series(panel, {"SSE"}, config, Weights::equal(1)), Error);
    try {
        coordination_series(panel, {"SSE", "nope"}, config, Weights::equal(2));
        FAIL("expected UnknownMember");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::unknown_member);
    }
    try {
        coordination_series(panel, {"SSE", "GEM"}, config, Weights::equal(3));
        FAIL("expected LengthMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::length_mismatch);
    }
}

TEST_CASE("coordination csv: header and row shape") {
    auto panel = load_table2();
    auto points = coordination_series(panel, {"SSE", "GEM"},
                                      NormalizationConfig{}, Weights::equal(2));
    auto csv = coordination_to_csv(points);
    CHECK(csv.rfind("date,c,t,d,c_stage,d_stage\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 96);
}
