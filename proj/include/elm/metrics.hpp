#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace elm {

inline constexpr std::size_t kGridSize = 4000;
/// Errors at or below this are treated as plateaued and left out of rate fits.
inline constexpr double kPlateauFloor = 1e-13;

/// Euclidean: plain 2-norm of the difference over the grid points.
/// Trapezoid: sqrt of the trapezoidal integral of the squared difference on [-1, 1].
enum class MetricMode { Euclidean, Trapezoid };
[[nodiscard]] std::string_view to_string(MetricMode m) noexcept;
[[nodiscard]] MetricMode parse_metric_mode(std::string_view s);

/// 4000 equispaced points on [-1, 1], endpoints included, exactly symmetric.
[[nodiscard]] const std::vector<double>& evaluation_grid();

/// Throws ValidationError on a length mismatch or an empty input. Trapezoid
/// mode assumes the samples sit on an equispaced grid spanning [-1, 1].
[[nodiscard]] double discrete_error(std::span<const double> approx, std::span<const double> exact,
                                    MetricMode mode = MetricMode::Euclidean);

/// One sweep point. `activation` is "LS", "GRB", "SP" or "Poly"; polynomial
/// rows use scheme "none" and N = M and carry no condition number.
struct ErrorRecord {
    std::string function_id;
    std::string node_kind;
    std::string activation;
    std::string scheme;
    std::string mode;
    std::size_t m = 0;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    double err = 0.0;
    std::optional<double> err_deriv;
    std::optional<double> cond;
    MetricMode metric_mode = MetricMode::Euclidean;
    /// Set when the row failed; err is meaningless then.
    std::optional<std::string> error;

    [[nodiscard]] bool ok() const noexcept { return !error.has_value(); }
    friend bool operator==(const ErrorRecord&, const ErrorRecord&) = default;
};

enum class FitScale { SemiLogY, LogLog };
[[nodiscard]] std::string_view to_string(FitScale s) noexcept;
[[nodiscard]] FitScale parse_fit_scale(std::string_view s);

struct ConvergenceFit {
    FitScale scale;
    double slope;
    double intercept;
    std::size_t m_lo;
    std::size_t m_hi;
    std::size_t points;
};

/// Least-squares line through (M, log10 err) or (log10 M, log10 err).
/// Failed rows and rows with err <= floor are skipped. Throws
/// ValidationError when fewer than three rows remain or when the rows mix
/// metric modes.
[[nodiscard]] ConvergenceFit fit_rate(std::span<const ErrorRecord> records, FitScale scale,
                                      double plateau_floor = kPlateauFloor);

/// Collapses replicate seeds: one row per (function, nodes, activation,
/// scheme, mode, M, N, metric) holding the medians of err, err_deriv and
/// cond. Failed rows are ignored; the output seed is 0. Output order follows
/// first appearance of each group.
[[nodiscard]] std::vector<ErrorRecord> median_over_seeds(std::span<const ErrorRecord> records);

[[nodiscard]] double median(std::vector<double> v);

}  // namespace elm
