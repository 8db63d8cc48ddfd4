#include "elm/targets.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "elm/errors.hpp"

namespace elm {
namespace {

constexpr std::array<double, 17> kPoly16 = {
    1.0, -10.0, 2.0, 4.0, -5.0, 3.0, -1.0, -10.0, -1.0, -9.0, -6.0, -8.0, 8.0, 8.0, 0.0, -4.0, 4.0};

constexpr std::array<std::string_view, 7> kIds = {"runge",     "randpoly16", "cos20x",   "sqrt2mx",
                                                  "tanh50pix", "absx",       "abssin5x3"};

double horner(double x) {
    double s = 0.0;
    for (auto it = kPoly16.rbegin(); it != kPoly16.rend(); ++it) s = s * x + *it;
    return s;
}

double horner_derivative(double x) {
    double s = 0.0;
    for (std::size_t k = kPoly16.size() - 1; k >= 1; --k) s = s * x + static_cast<double>(k) * kPoly16[k];
    return s;
}

std::vector<TargetFunction> build_catalog() {
    using std::numbers::pi;
    std::vector<TargetFunction> c;
    c.emplace_back(
        "runge", [](double x) { return 1.0 / (1.0 + 25.0 * x * x); },
        [](double x) {
            const double d = 1.0 + 25.0 * x * x;
            return -50.0 * x / (d * d);
        },
        Regularity::AnalyticOnInterval, ExpectedRate{RateKind::Geometric, (1.0 + std::sqrt(26.0)) / 5.0});
    c.emplace_back("randpoly16", horner, horner_derivative, Regularity::Entire,
                   ExpectedRate{RateKind::Supergeometric});
    c.emplace_back(
        "cos20x", [](double x) { return std::cos(20.0 * x); }, [](double x) { return -20.0 * std::sin(20.0 * x); },
        Regularity::Entire, ExpectedRate{RateKind::Supergeometric});
    // branch point at x = 2: Bernstein ellipse parameter 2 + sqrt(3)
    c.emplace_back(
        "sqrt2mx", [](double x) { return std::sqrt(2.0 - x); }, [](double x) { return -0.5 / std::sqrt(2.0 - x); },
        Regularity::AnalyticOnInterval, ExpectedRate{RateKind::Geometric, 2.0 + std::sqrt(3.0)});
    // poles at +-0.01i
    c.emplace_back(
        "tanh50pix", [](double x) { return std::tanh(50.0 * pi * x); },
        [](double x) {
            const double t = std::tanh(50.0 * pi * x);
            return 50.0 * pi * (1.0 - t * t);
        },
        Regularity::AnalyticOnInterval, ExpectedRate{RateKind::Geometric, 0.01 + std::sqrt(1.0 + 0.01 * 0.01)});
    c.emplace_back(
        "absx", [](double x) { return std::abs(x); }, [](double x) { return x > 0.0 ? 1.0 : -1.0; },
        Regularity::FiniteSmoothness, ExpectedRate{RateKind::Algebraic, 1.0}, std::vector<double>{0.0});
    c.emplace_back(
        "abssin5x3",
        [](double x) {
            const double s = std::abs(std::sin(5.0 * x));
            return s * s * s;
        },
        [](double x) {
            const double s = std::sin(5.0 * x);
            return 15.0 * s * std::abs(s) * std::cos(5.0 * x);
        },
        Regularity::FiniteSmoothness, ExpectedRate{RateKind::Algebraic, 3.0});
    return c;
}

void check_domain(const std::string& id, double x) {
    if (!(x >= -1.0 && x <= 1.0)) throw DomainError(id + ": x = " + std::to_string(x) + " outside [-1, 1]");
}

}  // namespace

double ExpectedRate::reference_slope() const {
    switch (kind) {
        case RateKind::Geometric: return -std::log10(constant);
        case RateKind::Algebraic: return -constant;
        case RateKind::Supergeometric: break;
    }
    throw ValidationError("supergeometric rate has no reference slope");
}

TargetFunction::TargetFunction(std::string id, Fn value, Fn derivative, Regularity regularity, ExpectedRate rate,
                               std::vector<double> derivative_kinks)
    : id_(std::move(id)),
      value_(std::move(value)),
      derivative_(std::move(derivative)),
      regularity_(regularity),
      rate_(rate),
      kinks_(std::move(derivative_kinks)) {}

double TargetFunction::eval(double x) const {
    check_domain(id_, x);
    return value_(x);
}

double TargetFunction::derivative(double x) const {
    check_domain(id_, x);
    for (double k : kinks_) {
        if (x == k) throw UndefinedDerivative(id_ + ": derivative undefined at x = " + std::to_string(x));
    }
    return derivative_(x);
}

std::span<const std::string_view> target_ids() noexcept { return kIds; }

const TargetFunction& target_by_id(std::string_view id) {
    static const std::vector<TargetFunction> catalog = build_catalog();
    for (const auto& f : catalog) {
        if (f.id() == id) return f;
    }
    throw ValidationError("unknown target function '" + std::string(id) + "'");
}

std::span<const double> randpoly16_coefficients() noexcept { return kPoly16; }

}  // namespace elm
