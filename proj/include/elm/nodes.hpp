#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace elm {

enum class NodeKind { EquispacedInclusive, ChebyshevSecondKind, UniformRandom };

/// "equispaced", "chebyshev", "random"
[[nodiscard]] std::string_view to_string(NodeKind k) noexcept;
[[nodiscard]] NodeKind parse_node_kind(std::string_view s);

/// Minimum gap between consecutive nodes.
inline constexpr double kMinNodeGap = 1e-12;

/// Sorted, distinct interpolation abscissas in [-1, 1].
class NodeSet {
public:
    /// Validates ordering, range, distinctness and size >= 2.
    NodeSet(NodeKind kind, std::vector<double> abscissas, std::optional<std::uint64_t> seed = std::nullopt);

    [[nodiscard]] NodeKind kind() const noexcept { return kind_; }
    [[nodiscard]] std::span<const double> abscissas() const noexcept { return x_; }
    [[nodiscard]] std::size_t size() const noexcept { return x_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const noexcept { return x_[i]; }
    [[nodiscard]] std::optional<std::uint64_t> seed() const noexcept { return seed_; }

private:
    NodeKind kind_;
    std::vector<double> x_;
    std::optional<std::uint64_t> seed_;
};

/// Equispaced: -1 + 2j/(M-1). Chebyshev: cos(j pi/(M-1)) ascending, with
/// exact mirror symmetry. Random: M sorted uniform draws on [-1, 1],
/// redrawn until the gap invariant holds. Seed is required for (and only
/// accepted with) the random kind.
[[nodiscard]] NodeSet generate_nodes(NodeKind kind, std::size_t m, std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace elm
