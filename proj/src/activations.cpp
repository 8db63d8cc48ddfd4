#include "elm/activations.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "elm/errors.hpp"

namespace elm {
namespace {

std::string upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::toupper(c); });
    return out;
}

double logistic(double z) noexcept {
    if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
    const double e = std::exp(z);
    return e / (1.0 + e);
}

double softplus(double z) noexcept {
    if (z > 30.0) return z + std::exp(-z);
    if (z < -30.0) return std::exp(z);
    return std::log1p(std::exp(z));
}

}  // namespace

std::string_view to_string(ActivationKind k) noexcept {
    switch (k) {
        case ActivationKind::LogisticSigmoid: return "LS";
        case ActivationKind::GaussianRadialBasis: return "GRB";
        case ActivationKind::SoftPlus: return "SP";
    }
    return "?";
}

std::string_view to_string(InteractionScheme s) noexcept {
    return s == InteractionScheme::Additive ? "additive" : "distance";
}

ActivationKind parse_activation(std::string_view s) {
    const auto u = upper(s);
    if (u == "LS") return ActivationKind::LogisticSigmoid;
    if (u == "GRB" || u == "RB") return ActivationKind::GaussianRadialBasis;
    if (u == "SP") return ActivationKind::SoftPlus;
    throw ValidationError("unknown activation '" + std::string(s) + "'");
}

InteractionScheme parse_scheme(std::string_view s) {
    const auto u = upper(s);
    if (u == "ADDITIVE") return InteractionScheme::Additive;
    if (u == "DISTANCE" || u == "DISTANCELIKE" || u == "DISTANCE-LIKE") return InteractionScheme::DistanceLike;
    throw ValidationError("unknown interaction scheme '" + std::string(s) + "'");
}

InteractionScheme natural_scheme(ActivationKind k) noexcept {
    return k == ActivationKind::GaussianRadialBasis ? InteractionScheme::DistanceLike : InteractionScheme::Additive;
}

bool valid_pairing(ActivationKind k, InteractionScheme s) noexcept { return natural_scheme(k) == s; }

double activation_value(ActivationKind k, double z) noexcept {
    switch (k) {
        case ActivationKind::LogisticSigmoid: return logistic(z);
        case ActivationKind::SoftPlus: return softplus(z);
        case ActivationKind::GaussianRadialBasis: return std::exp(-z * z);
    }
    return 0.0;
}

double activation_derivative(ActivationKind k, double z) noexcept {
    switch (k) {
        case ActivationKind::LogisticSigmoid: {
            const double s = logistic(z);
            return s * (1.0 - s);
        }
        case ActivationKind::SoftPlus: return logistic(z);
        case ActivationKind::GaussianRadialBasis: return -2.0 * z * std::exp(-z * z);
    }
    return 0.0;
}

Neuron::Neuron(ActivationKind kind, InteractionScheme scheme, double weight_a, double bias_beta)
    : kind_(kind), scheme_(scheme), a_(weight_a), beta_(bias_beta) {
    if (!valid_pairing(kind, scheme)) {
        throw ValidationError(std::string("activation ") + std::string(to_string(kind)) +
                              " cannot be used with the " + std::string(to_string(scheme)) + " scheme");
    }
    if (!std::isfinite(a_) || !std::isfinite(beta_)) throw ValidationError("neuron parameters must be finite");
    if (scheme_ == InteractionScheme::DistanceLike && !(beta_ > 0.0)) {
        throw ValidationError("distance-like neuron needs a positive radius");
    }
}

double Neuron::feature(double x) const noexcept {
    if (scheme_ == InteractionScheme::Additive) return activation_value(kind_, a_ * x + beta_);
    return activation_value(kind_, std::abs(x - a_) / beta_);
}

double Neuron::feature_derivative(double x) const noexcept {
    if (scheme_ == InteractionScheme::Additive) return activation_derivative(kind_, a_ * x + beta_) * a_;
    // psi(|t|) with t = (x - a)/beta; only even psi (GRB) reaches here, so psi(|t|) = psi(t)
    const double t = (x - a_) / beta_;
    return activation_derivative(kind_, t) / beta_;
}

}  // namespace elm
