#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>

#include "elm/metrics.hpp"
#include "elm/targets.hpp"

namespace elm {

struct PlotOptions {
    std::string title;
    /// Reference-rate triangle. When unset, the expected rate of the records'
    /// target function is used if it matches the scale (geometric on
    /// semilogy, algebraic on loglog).
    std::optional<ExpectedRate> reference;
    bool derivative = false;  // plot err_deriv instead of err
};

/// Standalone SVG: one polyline per activation plus Poly (seed medians),
/// log-scaled error axis (and log-scaled M axis for LogLog), decade tick
/// labels spanning the data, and the reference triangle. Throws
/// ValidationError when no usable record is given.
[[nodiscard]] std::string render_plot(std::span<const ErrorRecord> records, FitScale scale,
                                      const PlotOptions& options = {});
/// Renders first, then writes; nothing is written on error.
void emit_plot(std::span<const ErrorRecord> records, FitScale scale, const std::filesystem::path& path,
               const PlotOptions& options = {});

}  // namespace elm
