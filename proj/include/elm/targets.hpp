#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace elm {

enum class Regularity { Entire, AnalyticOnInterval, FiniteSmoothness };

enum class RateKind { Geometric, Supergeometric, Algebraic };

/// Expected convergence of Chebyshev polynomial interpolation for a target:
/// Geometric means err ~ C^-M, Algebraic means err ~ M^-nu.
struct ExpectedRate {
    RateKind kind;
    double constant = 0.0;  // C for Geometric, nu for Algebraic

    /// Slope of the reference line: -log10(C) per unit M (semilog) or -nu (log-log).
    [[nodiscard]] double reference_slope() const;
    [[nodiscard]] bool has_reference() const noexcept { return kind != RateKind::Supergeometric; }
};

/// A benchmark function on [-1, 1] with its exact derivative.
class TargetFunction {
public:
    using Fn = std::function<double(double)>;

    TargetFunction(std::string id, Fn value, Fn derivative, Regularity regularity, ExpectedRate rate,
                   std::vector<double> derivative_kinks = {});

    [[nodiscard]] const std::string& id() const noexcept { return id_; }
    [[nodiscard]] Regularity regularity() const noexcept { return regularity_; }
    [[nodiscard]] const ExpectedRate& expected_rate() const noexcept { return rate_; }
    /// Points where the first derivative does not exist.
    [[nodiscard]] std::span<const double> derivative_kinks() const noexcept { return kinks_; }

    /// Throws DomainError outside [-1, 1].
    [[nodiscard]] double eval(double x) const;
    /// Throws DomainError outside [-1, 1] and UndefinedDerivative at a kink.
    [[nodiscard]] double derivative(double x) const;

private:
    std::string id_;
    Fn value_;
    Fn derivative_;
    Regularity regularity_;
    ExpectedRate rate_;
    std::vector<double> kinks_;
};

/// runge, randpoly16, cos20x, sqrt2mx, tanh50pix, absx, abssin5x3
[[nodiscard]] std::span<const std::string_view> target_ids() noexcept;
/// Throws ValidationError for an unknown id.
[[nodiscard]] const TargetFunction& target_by_id(std::string_view id);

[[nodiscard]] inline double target_eval(const TargetFunction& f, double x) { return f.eval(x); }
[[nodiscard]] inline double target_derivative(const TargetFunction& f, double x) { return f.derivative(x); }

/// Coefficients of the degree-16 benchmark polynomial, constant term first.
[[nodiscard]] std::span<const double> randpoly16_coefficients() noexcept;

}  // namespace elm
