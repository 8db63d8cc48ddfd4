#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "elm/activations.hpp"
#include "elm/errors.hpp"

using namespace elm;

namespace {
constexpr ActivationKind kLS = ActivationKind::LogisticSigmoid;
constexpr ActivationKind kGRB = ActivationKind::GaussianRadialBasis;
constexpr ActivationKind kSP = ActivationKind::SoftPlus;
const double kLn2 = std::log(2.0);

double central_difference(const Neuron& n, double x, double h = 1e-6) {
    return (n.feature(x + h) - n.feature(x - h)) / (2 * h);
}
}  // namespace

TEST(Activation, ValuesAtZero) {
    EXPECT_DOUBLE_EQ(activation_value(kLS, 0.0), 0.5);
    EXPECT_DOUBLE_EQ(activation_value(kGRB, 0.0), 1.0);
    EXPECT_NEAR(activation_value(kSP, 0.0), 0.693147, 1e-6);
    EXPECT_DOUBLE_EQ(activation_value(kSP, 0.0), kLn2);
}

TEST(Activation, DerivativesAtZero) {
    EXPECT_DOUBLE_EQ(activation_derivative(kLS, 0.0), 0.25);
    EXPECT_DOUBLE_EQ(activation_derivative(kGRB, 0.0), 0.0);
    EXPECT_DOUBLE_EQ(activation_derivative(kSP, 0.0), 0.5);
}

TEST(Activation, SoftPlusDerivativeIsLogistic) {
    std::mt19937_64 g(1);
    std::uniform_real_distribution<double> u(-60, 60);
    for (int i = 0; i < 100; ++i) {
        const double z = u(g);
        EXPECT_NEAR(activation_derivative(kSP, z) - activation_value(kLS, z), 0.0, 1e-15) << z;
    }
}

TEST(Activation, RangesOnRandomArguments) {
    std::mt19937_64 g(2);
    std::uniform_real_distribution<double> u(-50, 50);
    for (int i = 0; i < 100000; ++i) {
        const double z = u(g);
        const double ls = activation_value(kLS, z);
        const double sp = activation_value(kSP, z);
        const double grb = activation_value(kGRB, z);
        ASSERT_GE(ls, 0.0);
        ASSERT_LE(ls, 1.0);
        ASSERT_GE(sp, 0.0);
        ASSERT_GE(grb, 0.0);
        ASSERT_LE(grb, 1.0);
        // strict bounds wherever the exact value is representable as a double
        if (std::abs(z) < 36.0) {
            ASSERT_GT(ls, 0.0);
            ASSERT_LT(ls, 1.0);
        }
        if (std::abs(z) < 26.0) {
            ASSERT_GT(grb, 0.0);
        }
        ASSERT_GT(sp, 0.0);
    }
}

TEST(Activation, SoftPlusIsSmoothRelu) {
    std::mt19937_64 g(3);
    std::uniform_real_distribution<double> u(-700, 700);
    for (int i = 0; i < 100000; ++i) {
        const double z = u(g);
        const double gap = activation_value(kSP, z) - std::max(z, 0.0);
        ASSERT_GE(gap, 0.0) << z;
        ASSERT_LE(gap, kLn2) << z;
        if (z < 30.0) {
            ASSERT_GT(gap, 0.0) << z;
        }
    }
    EXPECT_DOUBLE_EQ(activation_value(kSP, 0.0) - 0.0, kLn2);
}

TEST(Activation, NoOverflowAtExtremeArguments) {
    for (double z : {-1e6, -745.0, -40.0, 40.0, 745.0, 1e6}) {
        for (auto k : {kLS, kGRB, kSP}) {
            EXPECT_TRUE(std::isfinite(activation_value(k, z))) << z;
            EXPECT_TRUE(std::isfinite(activation_derivative(k, z))) << z;
        }
    }
    EXPECT_DOUBLE_EQ(activation_value(kSP, 1e6), 1e6);
    EXPECT_DOUBLE_EQ(activation_value(kLS, -1e6), 0.0);
}

TEST(Activation, Names) {
    EXPECT_EQ(to_string(kLS), "LS");
    EXPECT_EQ(to_string(kGRB), "GRB");
    EXPECT_EQ(to_string(kSP), "SP");
    EXPECT_EQ(parse_activation("grb"), kGRB);
    EXPECT_EQ(parse_activation("RB"), kGRB);
    EXPECT_EQ(parse_activation("sp"), kSP);
    EXPECT_THROW((void)parse_activation("relu"), ValidationError);
    EXPECT_EQ(parse_scheme("distance"), InteractionScheme::DistanceLike);
    EXPECT_THROW((void)parse_scheme("multiplicative"), ValidationError);
}

TEST(Neuron, PairingAndParameterValidation) {
    EXPECT_TRUE(valid_pairing(kLS, InteractionScheme::Additive));
    EXPECT_TRUE(valid_pairing(kGRB, InteractionScheme::DistanceLike));
    EXPECT_FALSE(valid_pairing(kGRB, InteractionScheme::Additive));
    EXPECT_FALSE(valid_pairing(kSP, InteractionScheme::DistanceLike));
    EXPECT_THROW(Neuron(kGRB, InteractionScheme::Additive, 1, 1), ValidationError);
    EXPECT_THROW(Neuron(kGRB, InteractionScheme::DistanceLike, 0, 0), ValidationError);
    EXPECT_THROW(Neuron(kGRB, InteractionScheme::DistanceLike, 0, -1), ValidationError);
    EXPECT_THROW(Neuron(kLS, InteractionScheme::Additive, std::nan(""), 0), ValidationError);
    EXPECT_THROW(Neuron(kSP, InteractionScheme::Additive, 1, std::numeric_limits<double>::infinity()),
                 ValidationError);
}

TEST(Neuron, FeatureExamples) {
    const Neuron flat(kLS, InteractionScheme::Additive, 0, 0);
    for (double x : {-1.0, 0.0, 0.37, 1.0}) EXPECT_DOUBLE_EQ(neuron_feature(flat, x), 0.5);
    const Neuron bump(kGRB, InteractionScheme::DistanceLike, 0.3, 1);
    EXPECT_DOUBLE_EQ(neuron_feature(bump, 0.3), 1.0);
    const Neuron sp(kSP, InteractionScheme::Additive, 1, 0);
    EXPECT_DOUBLE_EQ(neuron_feature(sp, 0.0), kLn2);
}

TEST(Neuron, DerivativeExamples) {
    const Neuron ls(kLS, InteractionScheme::Additive, 1, 0);
    EXPECT_DOUBLE_EQ(neuron_feature_derivative(ls, 0.0), 0.25);
    const Neuron bump(kGRB, InteractionScheme::DistanceLike, -0.4, 0.2);
    EXPECT_DOUBLE_EQ(neuron_feature_derivative(bump, -0.4), 0.0);
}

TEST(Neuron, DistanceLikeIsSymmetricAboutCentre) {
    const Neuron bump(kGRB, InteractionScheme::DistanceLike, 0.25, 0.3);
    for (double d : {0.01, 0.1, 0.5}) {
        EXPECT_DOUBLE_EQ(bump.feature(0.25 + d), bump.feature(0.25 - d));
        EXPECT_NEAR(bump.feature_derivative(0.25 + d), -bump.feature_derivative(0.25 - d), 1e-15);
    }
}

TEST(Neuron, DerivativeMatchesFiniteDifferences) {
    std::mt19937_64 g(4);
    std::uniform_real_distribution<double> slope(-50, 50);
    std::uniform_real_distribution<double> centre(-1.2, 1.2);
    std::uniform_real_distribution<double> radius(0.05, 2.0);
    std::uniform_real_distribution<double> xs(-1, 1);
    const ActivationKind kinds[] = {kLS, kGRB, kSP};
    for (int i = 0; i < 1000; ++i) {
        const ActivationKind k = kinds[i % 3];
        const InteractionScheme s = natural_scheme(k);
        const double c = centre(g);
        const Neuron n = s == InteractionScheme::Additive ? [&] {
            const double a = slope(g);
            return Neuron(k, s, a, -a * c);
        }()
                                                          : Neuron(k, s, c, radius(g));
        const double x = xs(g);
        const double d = n.feature_derivative(x);
        EXPECT_LE(std::abs(d - central_difference(n, x)), 1e-6 * (1 + std::abs(d)))
            << to_string(k) << " a=" << n.weight_a() << " beta=" << n.bias_beta() << " x=" << x;
    }
}
