#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "elm/experiment.hpp"

namespace elm {

/// A named bundle of experiment configurations reproducing one results
/// table or convergence figure.
struct ExperimentSuite {
    std::string name;
    std::string description;
    FitScale scale = FitScale::SemiLogY;
    bool plot_derivative = false;
    std::vector<ExperimentConfig> configs;
};

/// table1..table6, fig1..fig10
[[nodiscard]] std::vector<std::string> suite_names();
/// Throws ValidationError for an unknown name. Every config gets base_seed.
[[nodiscard]] ExperimentSuite make_suite(std::string_view name, std::uint64_t base_seed = kDefaultBaseSeed);

/// File stem used for a config's CSV/SVG outputs inside a suite.
[[nodiscard]] std::string output_stem(const ExperimentSuite& suite, const ExperimentConfig& cfg);

}  // namespace elm
