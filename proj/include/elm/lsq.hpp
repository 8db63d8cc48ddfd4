#pragma once

#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "elm/matrix.hpp"

namespace elm {

struct LsqSolution {
    std::vector<double> coefficients;
    double residual_norm = 0.0;
    std::size_t effective_rank = 0;
    double sigma_max = 0.0;
    double sigma_min_kept = 0.0;
    double sigma_min = 0.0;  // smallest singular value, kept or not
};

/// Returned by condition_estimate when the smallest singular value is zero
/// to working precision.
inline constexpr double kConditionOverflow = std::numeric_limits<double>::infinity();

/// machine-epsilon * max(rows, cols)
[[nodiscard]] double default_rank_tol(const Matrix& a) noexcept;

/// Minimum-norm least-squares solution of A x ~= b by truncated SVD.
///
/// Singular values sigma_k <= rank_tol * sigma_max are discarded, so the
/// result is the pseudoinverse solution of the rank-truncated system: it
/// minimises ||A x - b|| and, among all minimisers, ||x||. When rank_tol is
/// omitted default_rank_tol(A) is used.
///
/// Throws ContractViolation on a dimension mismatch or rank_tol outside
/// (0, 1), and ValidationError on non-finite right-hand side.
[[nodiscard]] LsqSolution solve_min_norm_lsq(const Matrix& a, std::span<const double> b,
                                             std::optional<double> rank_tol = std::nullopt);

/// Condition number from extreme singular values with the overflow rule below.
[[nodiscard]] double condition_from_extremes(double sigma_max, double sigma_min, const Matrix& a) noexcept;

/// sigma_max / sigma_min over the min(rows, cols) singular values, or
/// kConditionOverflow when sigma_min <= eps * max(rows, cols) * sigma_max.
[[nodiscard]] double condition_estimate(const Matrix& a);

/// Singular values, descending.
[[nodiscard]] std::vector<double> singular_values(const Matrix& a);

/// Orthonormal basis of the numerical null space of A (cols x k, one basis
/// vector per column), using the same truncation rule as solve_min_norm_lsq.
[[nodiscard]] Matrix null_space_basis(const Matrix& a, std::optional<double> rank_tol = std::nullopt);

}  // namespace elm
