#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "elm/barycentric.hpp"
#include "elm/errors.hpp"
#include "elm/metrics.hpp"
#include "elm/targets.hpp"
#include "support.hpp"

using namespace elm;
namespace ts = testsupport;

namespace {

ErrorRecord rec(std::size_t m, double err, std::string activation = "LS", std::uint64_t seed = 1) {
    ErrorRecord r;
    r.function_id = "runge";
    r.node_kind = "chebyshev";
    r.activation = std::move(activation);
    r.scheme = "additive";
    r.mode = "overparam";
    r.m = m;
    r.n = 2 * m;
    r.seed = seed;
    r.err = err;
    return r;
}

}  // namespace

TEST(Grid, Shape) {
    const auto& g = evaluation_grid();
    ASSERT_EQ(g.size(), 4000u);
    EXPECT_EQ(g.front(), -1.0);
    EXPECT_EQ(g.back(), 1.0);
    for (std::size_t k = 0; k < g.size(); ++k) ASSERT_EQ(g[k], -g[3999 - k]);
    for (std::size_t k = 1; k < g.size(); ++k) {
        ASSERT_GT(g[k], g[k - 1]);
        ASSERT_NEAR(g[k] - g[k - 1], 2.0 / 3999.0, 1e-15);
    }
}

TEST(DiscreteError, Examples) {
    const auto& g = evaluation_grid();
    std::vector<double> a(g.begin(), g.end());
    EXPECT_EQ(discrete_error(a, a), 0.0);
    std::vector<double> b = a;
    for (double& v : b) v += 0.1;
    EXPECT_NEAR(discrete_error(b, a), 0.1 * std::sqrt(4000.0), 1e-12);
    EXPECT_NEAR(discrete_error(b, a), 6.32456, 1e-5);
    EXPECT_NEAR(discrete_error(b, a, MetricMode::Trapezoid), 0.1 * std::sqrt(2.0), 1e-12);
    EXPECT_THROW((void)discrete_error(a, std::vector<double>(3999, 0.0)), ValidationError);
    EXPECT_THROW((void)discrete_error(std::vector<double>{}, std::vector<double>{}), ValidationError);
}

TEST(DiscreteError, IsANorm) {
    std::mt19937_64 gen(4);
    std::uniform_real_distribution<double> scale(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto x = ts::random_vec(gen, 4000);
        const auto y = ts::random_vec(gen, 4000);
        const auto z = ts::random_vec(gen, 4000);
        for (auto mode : {MetricMode::Euclidean, MetricMode::Trapezoid}) {
            EXPECT_GT(discrete_error(x, y, mode), 0.0);
            // homogeneity in the difference
            const double c = scale(gen);
            std::vector<double> cx(4000);
            std::vector<double> cy(4000);
            for (std::size_t k = 0; k < 4000; ++k) {
                cx[k] = c * x[k];
                cy[k] = c * y[k];
            }
            EXPECT_NEAR(discrete_error(cx, cy, mode), std::abs(c) * discrete_error(x, y, mode),
                        1e-12 * (1 + discrete_error(cx, cy, mode)));
            EXPECT_LE(discrete_error(x, z, mode), discrete_error(x, y, mode) + discrete_error(y, z, mode) + 1e-12);
            EXPECT_EQ(discrete_error(x, y, mode), discrete_error(y, x, mode));
        }
    }
}

TEST(DiscreteError, RungePolyOnChebyshevTwentyNodes) {
    const auto& f = target_by_id("runge");
    const auto nodes = generate_nodes(NodeKind::ChebyshevSecondKind, 20);
    std::vector<double> y;
    for (double x : nodes.abscissas()) y.push_back(f.eval(x));
    const BarycentricInterpolant p(nodes, y);
    std::vector<double> exact;
    for (double x : evaluation_grid()) exact.push_back(f.eval(x));
    const double e = discrete_error(p.eval(evaluation_grid()), exact);
    EXPECT_GE(e, 5.06e-1 / 3);
    EXPECT_LE(e, 5.06e-1 * 3);
}

TEST(FitRate, SyntheticAlgebraic) {
    std::vector<ErrorRecord> rs;
    for (std::size_t m : {10u, 20u, 40u, 80u, 160u}) rs.push_back(rec(m, std::pow(static_cast<double>(m), -3.0)));
    const auto fit = fit_rate(rs, FitScale::LogLog);
    EXPECT_NEAR(fit.slope, -3.0, 1e-10);
    EXPECT_EQ(fit.points, 5u);
    EXPECT_EQ(fit.m_lo, 10u);
    EXPECT_EQ(fit.m_hi, 160u);
}

TEST(FitRate, SyntheticGeometric) {
    std::vector<ErrorRecord> rs;
    for (std::size_t m = 4; m <= 40; m += 4) rs.push_back(rec(m, std::pow(2.0, -static_cast<double>(m))));
    const auto fit = fit_rate(rs, FitScale::SemiLogY);
    EXPECT_NEAR(fit.slope, -std::log10(2.0), 1e-10);
    EXPECT_NEAR(fit.intercept, 0.0, 1e-10);
}

TEST(FitRate, PlateauAndFailedRowsSkipped) {
    std::vector<ErrorRecord> rs;
    for (std::size_t m : {10u, 20u, 40u}) rs.push_back(rec(m, 1.0 / static_cast<double>(m)));
    rs.push_back(rec(80, 1e-15));  // plateau
    auto failed = rec(160, 123.0);
    failed.error = "boom";
    rs.push_back(failed);
    const auto fit = fit_rate(rs, FitScale::LogLog);
    EXPECT_EQ(fit.points, 3u);
    EXPECT_NEAR(fit.slope, -1.0, 1e-12);
    EXPECT_EQ(fit.m_hi, 40u);
}

TEST(FitRate, Errors) {
    std::vector<ErrorRecord> two = {rec(10, 1e-1), rec(20, 1e-2)};
    EXPECT_THROW((void)fit_rate(two, FitScale::SemiLogY), ValidationError);
    std::vector<ErrorRecord> mixed = {rec(10, 1e-1), rec(20, 1e-2), rec(40, 1e-3)};
    mixed[1].metric_mode = MetricMode::Trapezoid;
    EXPECT_THROW((void)fit_rate(mixed, FitScale::SemiLogY), ValidationError);
}

TEST(Median, Basics) {
    EXPECT_EQ(median({3, 1, 2}), 2.0);
    EXPECT_EQ(median({4, 1, 2, 3}), 2.5);
    EXPECT_THROW((void)median({}), ValidationError);
}

TEST(Median, OverSeeds) {
    std::vector<ErrorRecord> rs = {rec(10, 1.0, "LS", 1), rec(10, 3.0, "LS", 2), rec(10, 2.0, "LS", 3),
                                   rec(10, 5.0, "GRB", 1), rec(20, 0.5, "LS", 1)};
    rs[0].cond = 10.0;
    rs[1].cond = 30.0;
    rs[2].cond = 20.0;
    auto failed = rec(10, 1e9, "LS", 4);
    failed.error = "x";
    rs.push_back(failed);
    const auto med = median_over_seeds(rs);
    ASSERT_EQ(med.size(), 3u);
    EXPECT_EQ(med[0].activation, "LS");
    EXPECT_EQ(med[0].m, 10u);
    EXPECT_EQ(med[0].err, 2.0);
    EXPECT_EQ(med[0].cond, std::optional<double>(20.0));
    EXPECT_EQ(med[0].seed, 0u);
    EXPECT_EQ(med[1].activation, "GRB");
    EXPECT_EQ(med[2].m, 20u);
}

TEST(Metrics, Names) {
    EXPECT_EQ(parse_metric_mode("trapezoid"), MetricMode::Trapezoid);
    EXPECT_EQ(to_string(MetricMode::Euclidean), "euclidean");
    EXPECT_EQ(parse_fit_scale("loglog"), FitScale::LogLog);
    EXPECT_THROW((void)parse_fit_scale("linear"), ValidationError);
}
