#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "elm/activations.hpp"
#include "elm/metrics.hpp"
#include "elm/network.hpp"
#include "elm/nodes.hpp"

namespace elm {

inline constexpr std::uint64_t kDefaultBaseSeed = 20230615;

struct ExperimentConfig {
    std::string function_id = "runge";
    NodeKind node_kind = NodeKind::ChebyshevSecondKind;
    std::vector<ActivationKind> activations = {ActivationKind::LogisticSigmoid, ActivationKind::GaussianRadialBasis,
                                               ActivationKind::SoftPlus};
    bool include_poly = true;
    TrainingMode mode = TrainingMode::Overparametrized;
    /// N = round(ratio * M); must be 1 for Square and > 1 for Overparametrized.
    double ratio = 2.0;
    std::vector<std::size_t> m_list = {10, 20, 40, 80, 160, 320};
    std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
    std::uint64_t base_seed = kDefaultBaseSeed;
    bool with_derivative = false;
    MetricMode metric_mode = MetricMode::Euclidean;
    InitOverrides init;
    std::optional<double> rank_tol;

    /// Throws ValidationError when the configuration is inconsistent.
    void validate() const;
    [[nodiscard]] std::size_t neurons_for(std::size_t m) const;
    /// Stable description of everything that shapes a row of this activation
    /// except M and the replicate seed. Defaults appear resolved.
    [[nodiscard]] std::string fingerprint(ActivationKind kind) const;

    /// Seed for the random node set of (M, replicate); shared by every
    /// activation and the polynomial baseline so they see the same nodes.
    [[nodiscard]] std::uint64_t node_seed(std::size_t m, std::uint64_t replicate) const;
    [[nodiscard]] std::uint64_t hidden_seed(std::size_t m, ActivationKind kind, std::uint64_t replicate) const;
};

/// Runs every (M, activation, seed) row plus polynomial baseline rows.
///
/// Rows execute in parallel; each is a pure function of its derived seeds,
/// and the result is sorted by (M, activation, seed), so the output does
/// not depend on scheduling. A row that throws is kept with its error set.
[[nodiscard]] std::vector<ErrorRecord> run_experiment(const ExperimentConfig& cfg);

/// Orders records by (function, nodes, mode, M, activation, seed), with
/// activations in the order LS, GRB, SP, Poly.
void sort_records(std::vector<ErrorRecord>& records);
[[nodiscard]] int activation_rank(std::string_view activation) noexcept;

inline constexpr const char* kPolyLabel = "Poly";

}  // namespace elm
