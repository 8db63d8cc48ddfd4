#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <string>

#include "elm/barycentric.hpp"
#include "elm/errors.hpp"
#include "elm/metrics.hpp"
#include "elm/targets.hpp"
#include "support.hpp"

using namespace elm;
namespace ts = testsupport;

namespace {

std::vector<double> sample(const NodeSet& nodes, auto&& f) {
    std::vector<double> y;
    for (double x : nodes.abscissas()) y.push_back(f(x));
    return y;
}

double poly_error(NodeKind kind, std::size_t m) {
    const auto& f = target_by_id("runge");
    const auto nodes = generate_nodes(kind, m);
    const BarycentricInterpolant p(nodes, sample(nodes, [&](double x) { return f.eval(x); }));
    const auto& grid = evaluation_grid();
    std::vector<double> exact;
    for (double x : grid) exact.push_back(f.eval(x));
    return discrete_error(p.eval(grid), exact);
}

}  // namespace

TEST(BaryWeights, TwoAndThreeNodes) {
    const std::vector<double> two{-1, 1};
    EXPECT_EQ(barycentric_weights(two), (std::vector<double>{-1, 1}));
    const std::vector<double> three{-1, 0, 1};
    EXPECT_EQ(barycentric_weights(three), (std::vector<double>{0.5, -1, 0.5}));
}

TEST(BaryWeights, ChebyshevClosedForm) {
    for (std::size_t m : {5u, 6u, 33u, 200u}) {
        const auto w = barycentric_weights(generate_nodes(NodeKind::ChebyshevSecondKind, m));
        // closed form: alternating unit weights, halved at both ends, common sign free
        const double sign = w[m - 1] > 0 ? 1.0 : -1.0;
        for (std::size_t j = 0; j < m; ++j) {
            const double delta = (j == 0 || j == m - 1) ? 0.5 : 1.0;
            const double ref = ((m - 1 - j) % 2 == 0 ? 1.0 : -1.0) * delta;
            EXPECT_NEAR(w[j], sign * ref, 1e-12) << m << " " << j;
        }
        double maxabs = 0;
        for (double v : w) maxabs = std::max(maxabs, std::abs(v));
        EXPECT_DOUBLE_EQ(maxabs, 1.0);
    }
}

TEST(BaryWeights, ProductFormulaOnRandomNodes) {
    std::mt19937_64 g(1);
    for (int trial = 0; trial < 20; ++trial) {
        const auto nodes = generate_nodes(NodeKind::UniformRandom, 9, g());
        const auto w = barycentric_weights(nodes);
        std::vector<double> raw(9);
        double maxabs = 0;
        for (std::size_t j = 0; j < 9; ++j) {
            double p = 1;
            for (std::size_t k = 0; k < 9; ++k)
                if (k != j) p *= nodes[j] - nodes[k];
            raw[j] = 1 / p;
            maxabs = std::max(maxabs, std::abs(raw[j]));
        }
        for (std::size_t j = 0; j < 9; ++j) EXPECT_NEAR(w[j], raw[j] / maxabs, 1e-12);
    }
}

TEST(BaryWeights, LargeSetsDoNotOverflow) {
    const auto w = barycentric_weights(generate_nodes(NodeKind::EquispacedInclusive, 1000));
    for (double v : w) {
        EXPECT_TRUE(std::isfinite(v));
    }
}

TEST(BaryWeights, Errors) {
    EXPECT_THROW((void)barycentric_weights(std::vector<double>{0.5}), ValidationError);
    EXPECT_THROW((void)barycentric_weights(std::vector<double>{0.1, 0.3, 0.1}), ValidationError);
}

TEST(PolyEval, Examples) {
    const NodeSet two(NodeKind::EquispacedInclusive, {-1, 1});
    EXPECT_DOUBLE_EQ(poly_eval(BarycentricInterpolant(two, {0, 2}), 0.0), 1.0);
    const NodeSet three(NodeKind::EquispacedInclusive, {-1, 0, 1});
    EXPECT_DOUBLE_EQ(poly_eval(BarycentricInterpolant(three, {1, 0, 1}), 0.5), 0.25);
    EXPECT_THROW(BarycentricInterpolant(three, {1, 2}), ContractViolation);
}

TEST(PolyEval, ExactAtNodes) {
    std::mt19937_64 g(2);
    for (auto kind : {NodeKind::EquispacedInclusive, NodeKind::ChebyshevSecondKind, NodeKind::UniformRandom}) {
        const auto nodes = kind == NodeKind::UniformRandom ? generate_nodes(kind, 37, 4) : generate_nodes(kind, 37);
        const auto y = ts::random_vec(g, 37);
        const BarycentricInterpolant p(nodes, y);
        for (std::size_t j = 0; j < 37; ++j) EXPECT_EQ(p.eval(nodes[j]), y[j]);
        const auto batch = p.eval(nodes.abscissas());
        EXPECT_EQ(batch, y);
    }
}

TEST(PolyEval, ReproducesPolynomials) {
    const auto& grid = evaluation_grid();
    auto check = [&](const NodeSet& nodes) {
        const std::size_t m = nodes.size();
        for (std::size_t d = 0; d < m; ++d) {
            const auto mono = [d](double x) { return std::pow(x, static_cast<double>(d)); };
            const BarycentricInterpolant p(nodes, sample(nodes, mono));
            const auto v = p.eval(grid);
            double err = 0;
            for (std::size_t k = 0; k < grid.size(); ++k) err = std::max(err, std::abs(v[k] - mono(grid[k])));
            ASSERT_LE(err, 1e-10) << "M=" << m << " degree " << d;
        }
    };
    for (std::size_t m = 2; m <= 30; ++m) check(generate_nodes(NodeKind::ChebyshevSecondKind, m));
    for (std::size_t m = 2; m <= 12; ++m) check(generate_nodes(NodeKind::EquispacedInclusive, m));
}

TEST(PolyEval, AgreesWithNewtonDividedDifferences) {
    std::mt19937_64 g(3);
    const auto& grid = evaluation_grid();
    const auto f = [](double x) { return std::cos(3 * x) + x; };
    double worst = 0.0;
    std::string where;
    for (std::size_t m = 2; m <= 12; ++m) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto nodes = generate_nodes(NodeKind::UniformRandom, m, g());
            const auto y = sample(nodes, f);
            const BarycentricInterpolant p(nodes, y);
            const ts::NewtonPoly newton({nodes.abscissas().begin(), nodes.abscissas().end()}, y);
            const auto v = p.eval(grid);
            for (std::size_t k = 0; k < grid.size(); ++k) {
                const double ref = newton(grid[k]);
                const double diff = std::abs(v[k] - ref) / (1 + std::abs(ref));
                if (diff > worst) {
                    worst = diff;
                    where = "M=" + std::to_string(m) + " x=" + std::to_string(grid[k]) +
                            " node hull [" + std::to_string(nodes[0]) + ", " + std::to_string(nodes[m - 1]) + "]";
                }
            }
        }
    }
    EXPECT_LE(worst, 1e-8) << where;
}

TEST(PolyEval, RungeDivergesOnEquispacedNodes) {
    const double e10 = poly_error(NodeKind::EquispacedInclusive, 10);
    const double e40 = poly_error(NodeKind::EquispacedInclusive, 40);
    EXPECT_GT(e40, e10);
    EXPECT_GT(e40, 100 * e10);
}

TEST(PolyEval, RungeConvergesOnChebyshevNodes) {
    double prev = poly_error(NodeKind::ChebyshevSecondKind, 10);
    for (std::size_t m : {20u, 40u, 80u, 160u}) {
        const double e = poly_error(NodeKind::ChebyshevSecondKind, m);
        EXPECT_LT(e, prev);
        prev = e;
    }
    EXPECT_LT(prev, 1e-11);
}
