#include "elm/suites.hpp"

#include <array>

#include "elm/errors.hpp"

namespace elm {
namespace {

constexpr std::array<NodeKind, 3> kAllNodes = {NodeKind::EquispacedInclusive, NodeKind::ChebyshevSecondKind,
                                               NodeKind::UniformRandom};

ExperimentConfig runge_config(NodeKind nodes, TrainingMode mode, bool derivative, std::uint64_t base_seed) {
    ExperimentConfig c;
    c.function_id = "runge";
    c.node_kind = nodes;
    c.mode = mode;
    c.ratio = mode == TrainingMode::Square ? 1.0 : 2.0;
    c.with_derivative = derivative;
    c.include_poly = !derivative;
    c.base_seed = base_seed;
    return c;
}

ExperimentSuite other_function(std::string name, std::string fn, FitScale scale, std::uint64_t base_seed) {
    ExperimentSuite s{std::move(name), fn + ", overparametrized, all node kinds", scale, false, {}};
    for (NodeKind k : kAllNodes) {
        ExperimentConfig c;
        c.function_id = fn;
        c.node_kind = k;
        c.base_seed = base_seed;
        s.configs.push_back(c);
    }
    return s;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"table1", "table2", "table3", "table4", "table5", "table6", "fig1", "fig2",
            "fig3",   "fig4",   "fig5",   "fig6",   "fig7",   "fig8",   "fig9", "fig10"};
}

ExperimentSuite make_suite(std::string_view name, std::uint64_t base_seed) {
    const auto sq = TrainingMode::Square;
    const auto op = TrainingMode::Overparametrized;
    if (name.starts_with("table") && name.size() == 6 && name[5] >= '1' && name[5] <= '6') {
        const int t = name[5] - '1';
        const NodeKind nodes = kAllNodes[static_cast<std::size_t>(t % 3)];
        const TrainingMode mode = t < 3 ? sq : op;
        return {std::string(name),
                "runge, " + std::string(to_string(mode)) + ", " + std::string(to_string(nodes)) + " nodes",
                FitScale::SemiLogY,
                false,
                {runge_config(nodes, mode, false, base_seed)}};
    }
    if (name == "fig1" || name == "fig2" || name == "fig3" || name == "fig4") {
        const bool deriv = name == "fig2" || name == "fig4";
        const TrainingMode mode = (name == "fig1" || name == "fig2") ? sq : op;
        ExperimentSuite s{std::string(name),
                          std::string("runge") + (deriv ? " derivative" : "") + ", " +
                              std::string(to_string(mode)) + ", all node kinds",
                          FitScale::SemiLogY,
                          deriv,
                          {}};
        for (NodeKind k : kAllNodes) s.configs.push_back(runge_config(k, mode, deriv, base_seed));
        return s;
    }
    if (name == "fig5") return other_function("fig5", "randpoly16", FitScale::SemiLogY, base_seed);
    if (name == "fig6") return other_function("fig6", "cos20x", FitScale::SemiLogY, base_seed);
    if (name == "fig7") return other_function("fig7", "sqrt2mx", FitScale::SemiLogY, base_seed);
    if (name == "fig8") return other_function("fig8", "tanh50pix", FitScale::SemiLogY, base_seed);
    if (name == "fig9") return other_function("fig9", "absx", FitScale::LogLog, base_seed);
    if (name == "fig10") return other_function("fig10", "abssin5x3", FitScale::LogLog, base_seed);
    throw ValidationError("unknown suite '" + std::string(name) + "'");
}

std::string output_stem(const ExperimentSuite& suite, const ExperimentConfig& cfg) {
    return suite.name + "_" + cfg.function_id + "_" + std::string(to_string(cfg.node_kind)) + "_" +
           std::string(to_string(cfg.mode));
}

}  // namespace elm
