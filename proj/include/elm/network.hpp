#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "elm/activations.hpp"
#include "elm/lsq.hpp"
#include "elm/matrix.hpp"
#include "elm/nodes.hpp"

namespace elm {

/// Closed interval used for sampling internal parameters; lo == hi is allowed.
struct Interval {
    double lo;
    double hi;
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Knobs for random hidden-layer initialisation. Unset fields take the
/// library defaults (see InitSpec::resolved).
struct InitOverrides {
    std::optional<Interval> slope_range;   // additive slopes, default [-20, 20] (SP: [-30, 30])
    std::optional<Interval> center_range;  // transition points / RBF centres, default [-1.2, 1.2]
    std::optional<double> radius;          // fixed RBF radius; default 1.6 / sqrt(N)
    std::optional<double> radius_factor;   // r = factor / sqrt(N), default 1.6
    std::optional<Interval> bias_range;    // when set, additive biases are sampled independently
};

/// Fully-resolved record of how a hidden layer was drawn.
struct InitSpec {
    InteractionScheme scheme;
    ActivationKind kind;
    std::uint64_t seed;
    Interval slope_range;
    Interval center_range;
    double radius_factor;             // r = radius_factor / sqrt(N) unless fixed_radius is set
    std::optional<double> fixed_radius;
    std::optional<Interval> bias_range;

    static InitSpec resolved(ActivationKind kind, InteractionScheme scheme, std::uint64_t seed,
                             const InitOverrides& overrides);
    friend bool operator==(const InitSpec&, const InitSpec&) = default;
};

inline constexpr Interval kDefaultSlopeRange{-20.0, 20.0};
// Softplus bends over a wider band than the sigmoid switches at equal slope.
inline constexpr Interval kDefaultSoftPlusSlopeRange{-30.0, 30.0};
[[nodiscard]] constexpr Interval default_slope_range(ActivationKind kind) noexcept {
    return kind == ActivationKind::SoftPlus ? kDefaultSoftPlusSlopeRange : kDefaultSlopeRange;
}
inline constexpr Interval kDefaultCenterRange{-1.2, 1.2};
inline constexpr double kDefaultRadiusFactor = 1.6;

class HiddenLayer {
public:
    /// All neurons must share one (kind, scheme); at least one neuron.
    explicit HiddenLayer(std::vector<Neuron> neurons, std::optional<InitSpec> init = std::nullopt);

    [[nodiscard]] std::span<const Neuron> neurons() const noexcept { return neurons_; }
    [[nodiscard]] std::size_t size() const noexcept { return neurons_.size(); }
    [[nodiscard]] ActivationKind kind() const noexcept { return neurons_.front().kind(); }
    [[nodiscard]] InteractionScheme scheme() const noexcept { return neurons_.front().scheme(); }
    [[nodiscard]] const std::optional<InitSpec>& init_spec() const noexcept { return init_; }

private:
    std::vector<Neuron> neurons_;
    std::optional<InitSpec> init_;
};

/// Random hidden layer of N neurons.
///
/// Additive: centre c ~ U(center_range), slope a ~ U(slope_range),
/// beta = -a*c so each transition sits at c (or beta ~ U(bias_range) when
/// independent biases are requested). DistanceLike: centre a ~ U(center_range),
/// radius fixed. Deterministic in the seed.
[[nodiscard]] HiddenLayer init_hidden(std::size_t n, ActivationKind kind, InteractionScheme scheme, std::uint64_t seed,
                                      const InitOverrides& overrides = {});

/// M x N matrix, S[j][i] = feature of neuron i at node j.
[[nodiscard]] Matrix assemble_collocation(const HiddenLayer& hidden, std::span<const double> nodes);
[[nodiscard]] Matrix assemble_collocation(const HiddenLayer& hidden, const NodeSet& nodes);

enum class TrainingMode { Square, Overparametrized };
[[nodiscard]] std::string_view to_string(TrainingMode m) noexcept;
[[nodiscard]] TrainingMode parse_training_mode(std::string_view s);

class TrainedNetwork {
public:
    TrainedNetwork(HiddenLayer hidden, std::vector<double> external_weights, TrainingMode mode,
                   double training_residual = 0.0, double collocation_condition = 0.0);

    [[nodiscard]] const HiddenLayer& hidden() const noexcept { return hidden_; }
    [[nodiscard]] std::span<const double> external_weights() const noexcept { return w_; }
    [[nodiscard]] TrainingMode mode() const noexcept { return mode_; }
    [[nodiscard]] double training_residual() const noexcept { return residual_; }
    [[nodiscard]] double collocation_condition() const noexcept { return condition_; }

    /// Same hidden layer, different external weights.
    [[nodiscard]] TrainedNetwork with_weights(std::vector<double> w) const;

    [[nodiscard]] double eval(double x) const noexcept;
    [[nodiscard]] double derivative(double x) const noexcept;
    /// Batch evaluation through the OpenMP kernel.
    [[nodiscard]] std::vector<double> eval(std::span<const double> xs) const;
    [[nodiscard]] std::vector<double> derivative(std::span<const double> xs) const;

private:
    HiddenLayer hidden_;
    std::vector<double> w_;
    TrainingMode mode_;
    double residual_;
    double condition_;
};

/// Solves S w = values in minimum norm. Mode is Square when M == N and
/// Overparametrized when M < N; M > N throws UnsupportedRegime.
[[nodiscard]] TrainedNetwork train(const HiddenLayer& hidden, std::span<const double> nodes,
                                   std::span<const double> values, std::optional<double> rank_tol = std::nullopt);
[[nodiscard]] TrainedNetwork train(const HiddenLayer& hidden, const NodeSet& nodes, std::span<const double> values,
                                   std::optional<double> rank_tol = std::nullopt);

[[nodiscard]] inline double network_eval(const TrainedNetwork& net, double x) noexcept { return net.eval(x); }
[[nodiscard]] inline double network_derivative(const TrainedNetwork& net, double x) noexcept {
    return net.derivative(x);
}

}  // namespace elm
