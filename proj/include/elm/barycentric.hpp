#pragma once

#include <span>
#include <vector>

#include "elm/nodes.hpp"

namespace elm {

/// Barycentric weights 1 / prod_{k != j} (x_j - x_k), rescaled so that
/// max |w_j| = 1. The binary exponent of each product is tracked apart from
/// its mantissa, so large M neither overflows nor loses accuracy.
/// Throws ValidationError on duplicate nodes or fewer than two nodes.
[[nodiscard]] std::vector<double> barycentric_weights(std::span<const double> nodes);
[[nodiscard]] std::vector<double> barycentric_weights(const NodeSet& nodes);

/// Polynomial interpolant through (nodes, values) in second barycentric form.
class BarycentricInterpolant {
public:
    BarycentricInterpolant(NodeSet nodes, std::vector<double> values);

    [[nodiscard]] const NodeSet& nodes() const noexcept { return nodes_; }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] std::span<const double> weights() const noexcept { return weights_; }

    [[nodiscard]] double eval(double x) const;
    [[nodiscard]] std::vector<double> eval(std::span<const double> xs) const;

private:
    NodeSet nodes_;
    std::vector<double> values_;
    std::vector<double> weights_;
};

[[nodiscard]] inline double poly_eval(const BarycentricInterpolant& p, double x) { return p.eval(x); }

}  // namespace elm
