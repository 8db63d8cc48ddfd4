#pragma once

#include <string>
#include <string_view>

namespace elm {

enum class ActivationKind { LogisticSigmoid, GaussianRadialBasis, SoftPlus };
enum class InteractionScheme { Additive, DistanceLike };

/// Short tags used in CSV/JSON/CLI: "LS", "GRB", "SP".
[[nodiscard]] std::string_view to_string(ActivationKind k) noexcept;
[[nodiscard]] std::string_view to_string(InteractionScheme s) noexcept;
/// Accepts the short tags case-insensitively; "RB" is an alias for "GRB".
[[nodiscard]] ActivationKind parse_activation(std::string_view s);
[[nodiscard]] InteractionScheme parse_scheme(std::string_view s);

/// The scheme an activation is paired with: GRB is distance-like, LS and SP additive.
[[nodiscard]] InteractionScheme natural_scheme(ActivationKind k) noexcept;
[[nodiscard]] bool valid_pairing(ActivationKind k, InteractionScheme s) noexcept;

[[nodiscard]] double activation_value(ActivationKind k, double z) noexcept;
[[nodiscard]] double activation_derivative(ActivationKind k, double z) noexcept;

/// One hidden unit. For Additive neurons `weight_a` is the slope and
/// `bias_beta` the offset, z = a*x + beta. For DistanceLike neurons
/// `weight_a` is the centre and `bias_beta` the radius, z = |x - a| / beta.
class Neuron {
public:
    /// Throws ValidationError on an invalid pairing, a non-positive radius
    /// or non-finite parameters.
    Neuron(ActivationKind kind, InteractionScheme scheme, double weight_a, double bias_beta);

    [[nodiscard]] ActivationKind kind() const noexcept { return kind_; }
    [[nodiscard]] InteractionScheme scheme() const noexcept { return scheme_; }
    [[nodiscard]] double weight_a() const noexcept { return a_; }
    [[nodiscard]] double bias_beta() const noexcept { return beta_; }

    [[nodiscard]] double feature(double x) const noexcept;
    [[nodiscard]] double feature_derivative(double x) const noexcept;

    friend bool operator==(const Neuron&, const Neuron&) = default;

private:
    ActivationKind kind_;
    InteractionScheme scheme_;
    double a_;
    double beta_;
};

[[nodiscard]] inline double neuron_feature(const Neuron& n, double x) noexcept { return n.feature(x); }
[[nodiscard]] inline double neuron_feature_derivative(const Neuron& n, double x) noexcept {
    return n.feature_derivative(x);
}

}  // namespace elm
