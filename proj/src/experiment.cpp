#include "elm/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <tuple>

#include "elm/barycentric.hpp"
#include "elm/errors.hpp"
#include "elm/rng.hpp"
#include "elm/targets.hpp"

namespace elm {
namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string interval_str(const Interval& iv) { return "[" + num(iv.lo) + "," + num(iv.hi) + "]"; }

std::string interval_str(const std::optional<Interval>& iv) { return iv ? interval_str(*iv) : "-"; }

std::string opt_str(const std::optional<double>& v) { return v ? num(*v) : "-"; }

struct RowTask {
    std::size_t m;
    std::uint64_t replicate;
    std::optional<ActivationKind> activation;  // empty = polynomial baseline
};

struct SampledTarget {
    std::vector<double> value;
    std::vector<double> deriv_x;  // grid points where the derivative exists
    std::vector<double> deriv;
};

SampledTarget sample_target(const TargetFunction& f, bool with_derivative) {
    const auto& grid = evaluation_grid();
    SampledTarget s;
    s.value.reserve(grid.size());
    for (double x : grid) s.value.push_back(f.eval(x));
    if (with_derivative) {
        for (double x : grid) {
            try {
                s.deriv.push_back(f.derivative(x));
                s.deriv_x.push_back(x);
            } catch (const UndefinedDerivative&) {
            }
        }
    }
    return s;
}

ErrorRecord base_record(const ExperimentConfig& cfg, std::size_t m) {
    ErrorRecord r;
    r.function_id = cfg.function_id;
    r.node_kind = std::string(to_string(cfg.node_kind));
    r.mode = std::string(to_string(cfg.mode));
    r.m = m;
    r.metric_mode = cfg.metric_mode;
    return r;
}

NodeSet make_nodes(const ExperimentConfig& cfg, std::size_t m, std::uint64_t replicate) {
    if (cfg.node_kind == NodeKind::UniformRandom) return generate_nodes(cfg.node_kind, m, cfg.node_seed(m, replicate));
    return generate_nodes(cfg.node_kind, m);
}

ErrorRecord run_row(const ExperimentConfig& cfg, const TargetFunction& f, const SampledTarget& exact,
                    const RowTask& task) {
    ErrorRecord r = base_record(cfg, task.m);
    r.seed = task.replicate;
    if (task.activation) {
        r.activation = std::string(to_string(*task.activation));
        r.scheme = std::string(to_string(natural_scheme(*task.activation)));
        r.n = cfg.neurons_for(task.m);
    } else {
        r.activation = kPolyLabel;
        r.scheme = "none";
        r.n = task.m;
    }
    try {
        const NodeSet nodes = make_nodes(cfg, task.m, task.replicate);
        std::vector<double> y;
        y.reserve(nodes.size());
        for (double x : nodes.abscissas()) y.push_back(f.eval(x));
        const auto& grid = evaluation_grid();

        if (task.activation) {
            const auto kind = *task.activation;
            const HiddenLayer hidden = init_hidden(r.n, kind, natural_scheme(kind),
                                                   cfg.hidden_seed(task.m, kind, task.replicate), cfg.init);
            const TrainedNetwork net = train(hidden, nodes, y, cfg.rank_tol);
            r.err = discrete_error(net.eval(grid), exact.value, cfg.metric_mode);
            r.cond = net.collocation_condition();
            if (cfg.with_derivative) {
                r.err_deriv = discrete_error(net.derivative(exact.deriv_x), exact.deriv, cfg.metric_mode);
            }
        } else {
            const BarycentricInterpolant p(nodes, std::move(y));
            r.err = discrete_error(p.eval(grid), exact.value, cfg.metric_mode);
        }
        if (!std::isfinite(r.err) || (r.err_deriv && !std::isfinite(*r.err_deriv))) {
            r.error = "non-finite error";
        }
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    return r;
}

}  // namespace

void ExperimentConfig::validate() const {
    (void)target_by_id(function_id);
    if (m_list.empty()) throw ValidationError("experiment: empty M list");
    for (std::size_t k = 0; k < m_list.size(); ++k) {
        if (m_list[k] < 2) throw ValidationError("experiment: every M must be >= 2");
        if (k > 0 && m_list[k] <= m_list[k - 1]) throw ValidationError("experiment: M list must be strictly increasing");
    }
    if (seeds.empty()) throw ValidationError("experiment: no seeds");
    if (activations.empty() && !include_poly) throw ValidationError("experiment: nothing to run");
    if (!std::isfinite(ratio) || ratio < 1.0) throw ValidationError("experiment: ratio must be >= 1");
    if (mode == TrainingMode::Square && ratio != 1.0) throw ValidationError("experiment: square mode needs ratio 1");
    if (mode == TrainingMode::Overparametrized) {
        for (std::size_t m : m_list) {
            if (neurons_for(m) <= m) throw ValidationError("experiment: overparametrized mode needs N > M");
        }
    }
    if (rank_tol && !(*rank_tol > 0.0 && *rank_tol < 1.0)) throw ValidationError("experiment: rank_tol outside (0, 1)");
    (void)InitSpec::resolved(ActivationKind::LogisticSigmoid, InteractionScheme::Additive, 0, init);
}

std::size_t ExperimentConfig::neurons_for(std::size_t m) const {
    return static_cast<std::size_t>(std::llround(ratio * static_cast<double>(m)));
}

std::string ExperimentConfig::fingerprint(ActivationKind kind) const {
    return function_id + "|" + std::string(to_string(node_kind)) + "|" + std::string(to_string(mode)) + "|" +
           num(ratio) + "|slope=" + interval_str(init.slope_range.value_or(default_slope_range(kind))) +
           "|center=" + interval_str(init.center_range.value_or(kDefaultCenterRange)) +
           "|radius=" + (init.radius ? num(*init.radius) : "f" + num(init.radius_factor.value_or(kDefaultRadiusFactor))) +
           "|bias=" + interval_str(init.bias_range) + "|tol=" + opt_str(rank_tol);
}

std::uint64_t ExperimentConfig::node_seed(std::size_t m, std::uint64_t replicate) const {
    return hash_combine({base_seed, hash_string("nodes"), m, replicate});
}

std::uint64_t ExperimentConfig::hidden_seed(std::size_t m, ActivationKind kind, std::uint64_t replicate) const {
    return hash_combine({base_seed, hash_string(fingerprint(kind)), m, static_cast<std::uint64_t>(kind), replicate});
}

int activation_rank(std::string_view activation) noexcept {
    if (activation == "LS") return 0;
    if (activation == "GRB") return 1;
    if (activation == "SP") return 2;
    if (activation == kPolyLabel) return 3;
    return 4;
}

void sort_records(std::vector<ErrorRecord>& records) {
    std::stable_sort(records.begin(), records.end(), [](const ErrorRecord& a, const ErrorRecord& b) {
        return std::forward_as_tuple(a.function_id, a.node_kind, a.mode, a.m, activation_rank(a.activation), a.seed) <
               std::forward_as_tuple(b.function_id, b.node_kind, b.mode, b.m, activation_rank(b.activation), b.seed);
    });
}

std::vector<ErrorRecord> run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const TargetFunction& f = target_by_id(cfg.function_id);
    const SampledTarget exact = sample_target(f, cfg.with_derivative);

    std::vector<RowTask> tasks;
    for (std::size_t m : cfg.m_list) {
        for (std::uint64_t rep : cfg.seeds) {
            for (ActivationKind k : cfg.activations) tasks.push_back({m, rep, k});
        }
        if (cfg.include_poly) {
            // deterministic node sets give one baseline row; random nodes give one per replicate
            if (cfg.node_kind == NodeKind::UniformRandom) {
                for (std::uint64_t rep : cfg.seeds) tasks.push_back({m, rep, std::nullopt});
            } else {
                tasks.push_back({m, 0, std::nullopt});
            }
        }
    }

    std::vector<ErrorRecord> out(tasks.size());
    const auto count = static_cast<std::ptrdiff_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t t = 0; t < count; ++t) {
        const auto idx = static_cast<std::size_t>(t);
        out[idx] = run_row(cfg, f, exact, tasks[idx]);
    }
    sort_records(out);
    return out;
}

}  // namespace elm
