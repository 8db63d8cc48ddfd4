#include "elm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "elm/errors.hpp"
#include "elm/matrix.hpp"

namespace elm {

std::string_view to_string(MetricMode m) noexcept {
    return m == MetricMode::Euclidean ? "euclidean" : "trapezoid";
}

MetricMode parse_metric_mode(std::string_view s) {
    if (s == "euclidean") return MetricMode::Euclidean;
    if (s == "trapezoid") return MetricMode::Trapezoid;
    throw ValidationError("unknown metric mode '" + std::string(s) + "'");
}

std::string_view to_string(FitScale s) noexcept { return s == FitScale::SemiLogY ? "semilogy" : "loglog"; }

FitScale parse_fit_scale(std::string_view s) {
    if (s == "semilogy" || s == "semilog") return FitScale::SemiLogY;
    if (s == "loglog") return FitScale::LogLog;
    throw ValidationError("unknown plot scale '" + std::string(s) + "'");
}

const std::vector<double>& evaluation_grid() {
    static const std::vector<double> grid = [] {
        std::vector<double> g(kGridSize);
        const double last = static_cast<double>(kGridSize - 1);
        for (std::size_t k = 0; k < kGridSize / 2; ++k) {
            g[k] = -1.0 + 2.0 * static_cast<double>(k) / last;
            g[kGridSize - 1 - k] = -g[k];
        }
        return g;
    }();
    return grid;
}

double discrete_error(std::span<const double> approx, std::span<const double> exact, MetricMode mode) {
    if (approx.size() != exact.size()) throw ValidationError("discrete_error: length mismatch");
    if (approx.empty()) throw ValidationError("discrete_error: empty input");
    std::vector<double> diff(approx.size());
    for (std::size_t k = 0; k < diff.size(); ++k) diff[k] = approx[k] - exact[k];
    if (mode == MetricMode::Euclidean) return norm2(diff);
    if (diff.size() < 2) throw ValidationError("discrete_error: trapezoid needs two samples");
    const double h = 2.0 / static_cast<double>(diff.size() - 1);
    diff.front() *= std::sqrt(0.5);
    diff.back() *= std::sqrt(0.5);
    return std::sqrt(h) * norm2(diff);
}

ConvergenceFit fit_rate(std::span<const ErrorRecord> records, FitScale scale, double plateau_floor) {
    std::optional<MetricMode> metric;
    std::vector<double> xs;
    std::vector<double> ys;
    std::size_t lo = 0;
    std::size_t hi = 0;
    for (const auto& r : records) {
        if (metric && *metric != r.metric_mode) throw ValidationError("fit_rate: records mix metric modes");
        metric = r.metric_mode;
        if (!r.ok() || !(r.err > plateau_floor) || !std::isfinite(r.err) || r.m == 0) continue;
        const double m = static_cast<double>(r.m);
        xs.push_back(scale == FitScale::SemiLogY ? m : std::log10(m));
        ys.push_back(std::log10(r.err));
        lo = xs.size() == 1 ? r.m : std::min(lo, r.m);
        hi = std::max(hi, r.m);
    }
    if (xs.size() < 3) throw ValidationError("fit_rate: need at least 3 usable records");

    const double n = static_cast<double>(xs.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        mx += xs[k];
        my += ys[k];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        sxx += (xs[k] - mx) * (xs[k] - mx);
        sxy += (xs[k] - mx) * (ys[k] - my);
    }
    if (sxx == 0.0) throw ValidationError("fit_rate: all records share one M");
    const double slope = sxy / sxx;
    return {scale, slope, my - slope * mx, lo, hi, xs.size()};
}

double median(std::vector<double> v) {
    if (v.empty()) throw ValidationError("median of empty set");
    std::sort(v.begin(), v.end());
    const std::size_t h = v.size() / 2;
    return v.size() % 2 == 1 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

std::vector<ErrorRecord> median_over_seeds(std::span<const ErrorRecord> records) {
    using Key = std::tuple<std::string, std::string, std::string, std::string, std::string, std::size_t,
                           std::size_t, int>;
    struct Group {
        ErrorRecord first;
        std::vector<double> err, deriv, cond;
    };
    std::map<Key, std::size_t> index;
    std::vector<Group> groups;
    for (const auto& r : records) {
        if (!r.ok()) continue;
        Key k{r.function_id, r.node_kind, r.activation, r.scheme, r.mode, r.m, r.n, static_cast<int>(r.metric_mode)};
        auto [it, inserted] = index.try_emplace(k, groups.size());
        if (inserted) groups.push_back(Group{r, {}, {}, {}});
        auto& g = groups[it->second];
        g.err.push_back(r.err);
        if (r.err_deriv) g.deriv.push_back(*r.err_deriv);
        if (r.cond) g.cond.push_back(*r.cond);
    }
    std::vector<ErrorRecord> out;
    out.reserve(groups.size());
    for (auto& g : groups) {
        ErrorRecord r = g.first;
        r.seed = 0;
        r.err = median(g.err);
        r.err_deriv = g.deriv.empty() ? std::nullopt : std::optional<double>(median(g.deriv));
        r.cond = g.cond.empty() ? std::nullopt : std::optional<double>(median(g.cond));
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace elm
