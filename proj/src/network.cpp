#include "elm/network.hpp"

#include <cmath>
#include <string>

#include "elm/errors.hpp"
#include "elm/kernels.hpp"
#include "elm/rng.hpp"

namespace elm {
namespace {

void check_interval(const Interval& iv, const char* what) {
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi) || iv.lo > iv.hi) {
        throw ValidationError(std::string("invalid ") + what + " range");
    }
}

}  // namespace

InitSpec InitSpec::resolved(ActivationKind kind, InteractionScheme scheme, std::uint64_t seed,
                            const InitOverrides& overrides) {
    InitSpec s{scheme,
               kind,
               seed,
               overrides.slope_range.value_or(default_slope_range(kind)),
               overrides.center_range.value_or(kDefaultCenterRange),
               overrides.radius_factor.value_or(kDefaultRadiusFactor),
               overrides.radius,
               overrides.bias_range};
    check_interval(s.slope_range, "slope");
    check_interval(s.center_range, "center");
    if (s.bias_range) check_interval(*s.bias_range, "bias");
    if (!(s.radius_factor > 0.0)) throw ValidationError("radius factor must be positive");
    if (s.fixed_radius && !(*s.fixed_radius > 0.0)) throw ValidationError("radius must be positive");
    return s;
}

HiddenLayer::HiddenLayer(std::vector<Neuron> neurons, std::optional<InitSpec> init)
    : neurons_(std::move(neurons)), init_(std::move(init)) {
    if (neurons_.empty()) throw ValidationError("HiddenLayer: need at least one neuron");
    for (const auto& n : neurons_) {
        if (n.kind() != neurons_.front().kind() || n.scheme() != neurons_.front().scheme()) {
            throw ValidationError("HiddenLayer: neurons must share activation and scheme");
        }
    }
}

HiddenLayer init_hidden(std::size_t n, ActivationKind kind, InteractionScheme scheme, std::uint64_t seed,
                        const InitOverrides& overrides) {
    if (n == 0) throw ValidationError("init_hidden: N must be >= 1");
    if (!valid_pairing(kind, scheme)) {
        throw ValidationError(std::string("init_hidden: ") + std::string(to_string(kind)) + " cannot use the " +
                              std::string(to_string(scheme)) + " scheme");
    }
    const InitSpec spec = InitSpec::resolved(kind, scheme, seed, overrides);
    Rng rng(seed);
    std::vector<Neuron> neurons;
    neurons.reserve(n);
    if (scheme == InteractionScheme::Additive) {
        for (std::size_t i = 0; i < n; ++i) {
            const double c = rng.uniform(spec.center_range.lo, spec.center_range.hi);
            const double a = rng.uniform(spec.slope_range.lo, spec.slope_range.hi);
            const double beta = spec.bias_range ? rng.uniform(spec.bias_range->lo, spec.bias_range->hi) : -a * c;
            neurons.emplace_back(kind, scheme, a, beta);
        }
    } else {
        const double r = spec.fixed_radius.value_or(spec.radius_factor / std::sqrt(static_cast<double>(n)));
        for (std::size_t i = 0; i < n; ++i) {
            neurons.emplace_back(kind, scheme, rng.uniform(spec.center_range.lo, spec.center_range.hi), r);
        }
    }
    return HiddenLayer(std::move(neurons), spec);
}

Matrix assemble_collocation(const HiddenLayer& hidden, std::span<const double> nodes) {
    std::vector<double> e(nodes.size() * hidden.size());
    kernels::collocation_omp(hidden.neurons(), nodes, e);
    return {nodes.size(), hidden.size(), std::move(e)};
}

Matrix assemble_collocation(const HiddenLayer& hidden, const NodeSet& nodes) {
    return assemble_collocation(hidden, nodes.abscissas());
}

std::string_view to_string(TrainingMode m) noexcept {
    return m == TrainingMode::Square ? "square" : "overparam";
}

TrainingMode parse_training_mode(std::string_view s) {
    if (s == "square") return TrainingMode::Square;
    if (s == "overparam" || s == "overparametrized") return TrainingMode::Overparametrized;
    throw ValidationError("unknown training mode '" + std::string(s) + "'");
}

TrainedNetwork::TrainedNetwork(HiddenLayer hidden, std::vector<double> external_weights, TrainingMode mode,
                               double training_residual, double collocation_condition)
    : hidden_(std::move(hidden)),
      w_(std::move(external_weights)),
      mode_(mode),
      residual_(training_residual),
      condition_(collocation_condition) {
    if (w_.size() != hidden_.size()) throw ContractViolation("TrainedNetwork: weight count != neuron count");
    for (double v : w_) {
        if (!std::isfinite(v)) throw ValidationError("TrainedNetwork: non-finite weight");
    }
}

TrainedNetwork TrainedNetwork::with_weights(std::vector<double> w) const {
    return {hidden_, std::move(w), mode_, 0.0, condition_};
}

double TrainedNetwork::eval(double x) const noexcept {
    double s = 0.0;
    const auto neurons = hidden_.neurons();
    for (std::size_t i = 0; i < neurons.size(); ++i) s += w_[i] * neurons[i].feature(x);
    return s;
}

double TrainedNetwork::derivative(double x) const noexcept {
    double s = 0.0;
    const auto neurons = hidden_.neurons();
    for (std::size_t i = 0; i < neurons.size(); ++i) s += w_[i] * neurons[i].feature_derivative(x);
    return s;
}

std::vector<double> TrainedNetwork::eval(std::span<const double> xs) const {
    std::vector<double> out(xs.size());
    kernels::network_omp(hidden_.neurons(), w_, xs, out, false);
    return out;
}

std::vector<double> TrainedNetwork::derivative(std::span<const double> xs) const {
    std::vector<double> out(xs.size());
    kernels::network_omp(hidden_.neurons(), w_, xs, out, true);
    return out;
}

TrainedNetwork train(const HiddenLayer& hidden, std::span<const double> nodes, std::span<const double> values,
                     std::optional<double> rank_tol) {
    if (values.size() != nodes.size()) throw ContractViolation("train: values length != node count");
    if (nodes.empty()) throw ValidationError("train: no nodes");
    const std::size_t m = nodes.size();
    const std::size_t n = hidden.size();
    if (m > n) {
        throw UnsupportedRegime("train: M = " + std::to_string(m) + " nodes exceeds N = " + std::to_string(n) +
                                " neurons");
    }
    const Matrix s = assemble_collocation(hidden, nodes);
    LsqSolution sol = solve_min_norm_lsq(s, values, rank_tol);
    const double cond = condition_from_extremes(sol.sigma_max, sol.sigma_min, s);
    const TrainingMode mode = m == n ? TrainingMode::Square : TrainingMode::Overparametrized;
    return {hidden, std::move(sol.coefficients), mode, sol.residual_norm, cond};
}

TrainedNetwork train(const HiddenLayer& hidden, const NodeSet& nodes, std::span<const double> values,
                     std::optional<double> rank_tol) {
    return train(hidden, nodes.abscissas(), values, rank_tol);
}

}  // namespace elm
