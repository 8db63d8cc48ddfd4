#include "elm/svg_plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <vector>

#include "elm/errors.hpp"
#include "elm/experiment.hpp"

namespace elm {
namespace {

constexpr double kWidth = 720;
constexpr double kHeight = 480;
constexpr double kLeft = 80;
constexpr double kRight = 130;
constexpr double kTop = 40;
constexpr double kBottom = 60;
constexpr double kTinyErr = 1e-16;

constexpr std::array<const char*, 5> kColors = {"#1f77b4", "#d62728", "#2ca02c", "#000000", "#9467bd"};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Series {
    std::string label;
    std::vector<std::pair<double, double>> points;  // (M, err)
};

class Axes {
public:
    Axes(double x0, double x1, int dec_lo, int dec_hi, bool log_x)
        : x0_(x0), x1_(x1), dlo_(dec_lo), dhi_(dec_hi), log_x_(log_x) {}

    [[nodiscard]] double px(double m) const {
        const double t = log_x_ ? std::log10(m) : m;
        const double a = log_x_ ? std::log10(x0_) : x0_;
        const double b = log_x_ ? std::log10(x1_) : x1_;
        const double frac = b > a ? (t - a) / (b - a) : 0.5;
        return kLeft + frac * (kWidth - kLeft - kRight);
    }
    [[nodiscard]] double py_log(double log10err) const {
        const double frac = (log10err - dlo_) / static_cast<double>(dhi_ - dlo_);
        return kHeight - kBottom - frac * (kHeight - kTop - kBottom);
    }
    [[nodiscard]] double py(double err) const { return py_log(std::log10(std::max(err, kTinyErr))); }
    [[nodiscard]] int dec_lo() const { return dlo_; }
    [[nodiscard]] int dec_hi() const { return dhi_; }
    [[nodiscard]] double x_lo() const { return x0_; }
    [[nodiscard]] double x_hi() const { return x1_; }

private:
    double x0_, x1_;
    int dlo_, dhi_;
    bool log_x_;
};

std::vector<Series> collect_series(std::span<const ErrorRecord> records, bool derivative) {
    const auto medians = median_over_seeds(records);
    std::map<std::pair<int, std::string>, Series> by_label;
    for (const auto& r : medians) {
        const std::optional<double> v = derivative ? r.err_deriv : std::optional<double>(r.err);
        if (!v || !std::isfinite(*v)) continue;
        auto& s = by_label[{activation_rank(r.activation), r.activation}];
        s.label = r.activation;
        s.points.emplace_back(static_cast<double>(r.m), *v);
    }
    std::vector<Series> out;
    for (auto& [key, s] : by_label) {
        std::sort(s.points.begin(), s.points.end());
        out.push_back(std::move(s));
    }
    return out;
}

std::optional<ExpectedRate> pick_reference(std::span<const ErrorRecord> records, FitScale scale,
                                           const PlotOptions& options) {
    if (options.reference) return options.reference;
    if (records.empty()) return std::nullopt;
    try {
        const auto& rate = target_by_id(records.front().function_id).expected_rate();
        if (scale == FitScale::SemiLogY && rate.kind == RateKind::Geometric) return rate;
        if (scale == FitScale::LogLog && rate.kind == RateKind::Algebraic) return rate;
    } catch (const ValidationError&) {
    }
    return std::nullopt;
}

std::string triangle(const Axes& ax, FitScale scale, const ExpectedRate& rate) {
    const double slope = rate.reference_slope();
    double xa;
    double xb;
    if (scale == FitScale::SemiLogY) {
        xa = ax.x_lo() + 0.55 * (ax.x_hi() - ax.x_lo());
        xb = ax.x_lo() + 0.85 * (ax.x_hi() - ax.x_lo());
    } else {
        const double la = std::log10(ax.x_lo());
        const double lb = std::log10(ax.x_hi());
        xa = std::pow(10.0, la + 0.55 * (lb - la));
        xb = std::pow(10.0, la + 0.85 * (lb - la));
    }
    const double run = scale == FitScale::SemiLogY ? xb - xa : std::log10(xb) - std::log10(xa);
    const double ya = ax.dec_lo() + 0.6 * (ax.dec_hi() - ax.dec_lo());
    const double yb = ya + slope * run;

    const std::string label = scale == FitScale::SemiLogY ? "reference slope " + fmt("%.4g", slope) + " per M"
                                                          : "reference M^" + fmt("%.4g", slope);
    std::string s = "<g class=\"reference\" data-slope=\"" + fmt("%.10g", slope) + "\">\n";
    s += "<polygon fill=\"none\" stroke=\"#000\" stroke-width=\"1.5\" points=\"" + fmt("%.2f", ax.px(xa)) + "," +
         fmt("%.2f", ax.py_log(ya)) + " " + fmt("%.2f", ax.px(xb)) + "," + fmt("%.2f", ax.py_log(yb)) + " " +
         fmt("%.2f", ax.px(xa)) + "," + fmt("%.2f", ax.py_log(yb)) + "\"/>\n";
    s += "<text x=\"" + fmt("%.2f", ax.px(xa) + 4) + "\" y=\"" + fmt("%.2f", ax.py_log(yb) + 16) +
         "\" font-size=\"11\">" + escape(label) + "</text>\n</g>\n";
    return s;
}

}  // namespace

std::string render_plot(std::span<const ErrorRecord> records, FitScale scale, const PlotOptions& options) {
    const auto series = collect_series(records, options.derivative);
    if (series.empty()) throw ValidationError("emit_plot: no usable records");

    double mlo = series.front().points.front().first;
    double mhi = mlo;
    double elo = series.front().points.front().second;
    double ehi = elo;
    for (const auto& s : series) {
        for (auto [m, e] : s.points) {
            mlo = std::min(mlo, m);
            mhi = std::max(mhi, m);
            elo = std::min(elo, std::max(e, kTinyErr));
            ehi = std::max(ehi, std::max(e, kTinyErr));
        }
    }
    int dlo = static_cast<int>(std::floor(std::log10(elo)));
    int dhi = static_cast<int>(std::ceil(std::log10(ehi)));
    if (dhi == dlo) ++dhi;
    const Axes ax(mlo, mhi, dlo, dhi, scale == FitScale::LogLog);

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt("%.0f", kWidth) + "\" height=\"" +
           fmt("%.0f", kHeight) + "\" viewBox=\"0 0 " + fmt("%.0f", kWidth) + " " + fmt("%.0f", kHeight) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";
    if (!options.title.empty()) {
        svg += "<text x=\"" + fmt("%.1f", kWidth / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" +
               escape(options.title) + "</text>\n";
    }
    const double plot_l = kLeft;
    const double plot_r = kWidth - kRight;
    const double plot_t = kTop;
    const double plot_b = kHeight - kBottom;
    svg += "<rect x=\"" + fmt("%.1f", plot_l) + "\" y=\"" + fmt("%.1f", plot_t) + "\" width=\"" +
           fmt("%.1f", plot_r - plot_l) + "\" height=\"" + fmt("%.1f", plot_b - plot_t) +
           "\" fill=\"none\" stroke=\"#000\"/>\n";

    // y ticks: every decade, labels thinned on tall ranges but always at both ends
    const int span = dhi - dlo;
    const int step = std::max(1, (span + 11) / 12);
    svg += "<g class=\"y-ticks\" font-size=\"11\" text-anchor=\"end\">\n";
    for (int d = dlo; d <= dhi; ++d) {
        const double y = ax.py_log(d);
        svg += "<line x1=\"" + fmt("%.1f", plot_l) + "\" x2=\"" + fmt("%.1f", plot_r) + "\" y1=\"" + fmt("%.2f", y) +
               "\" y2=\"" + fmt("%.2f", y) + "\" stroke=\"#ddd\"/>\n";
        if ((d - dlo) % step == 0 || d == dhi) {
            svg += "<text x=\"" + fmt("%.1f", plot_l - 6) + "\" y=\"" + fmt("%.2f", y + 4) + "\">1e" +
                   std::to_string(d) + "</text>\n";
        }
    }
    svg += "</g>\n";

    std::vector<double> ms;
    for (const auto& s : series)
        for (auto [m, e] : s.points) ms.push_back(m);
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    svg += "<g class=\"x-ticks\" font-size=\"11\" text-anchor=\"middle\">\n";
    for (double m : ms) {
        svg += "<text x=\"" + fmt("%.2f", ax.px(m)) + "\" y=\"" + fmt("%.1f", plot_b + 18) + "\">" +
               fmt("%.0f", m) + "</text>\n";
    }
    svg += "</g>\n";
    svg += "<text x=\"" + fmt("%.1f", (plot_l + plot_r) / 2) + "\" y=\"" + fmt("%.1f", kHeight - 14) +
           "\" text-anchor=\"middle\" font-size=\"13\">M" +
           std::string(scale == FitScale::LogLog ? " (log scale)" : "") + "</text>\n";
    svg += "<text x=\"18\" y=\"" + fmt("%.1f", (plot_t + plot_b) / 2) + "\" font-size=\"13\" transform=\"rotate(-90 18 " +
           fmt("%.1f", (plot_t + plot_b) / 2) + ")\" text-anchor=\"middle\">" +
           std::string(options.derivative ? "derivative error" : "error") + "</text>\n";

    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto& s = series[k];
        const char* color = kColors[std::min<std::size_t>(activation_rank(s.label), kColors.size() - 1)];
        std::string pts;
        for (auto [m, e] : s.points) pts += fmt("%.2f", ax.px(m)) + "," + fmt("%.2f", ax.py(e)) + " ";
        svg += "<polyline class=\"series\" data-label=\"" + escape(s.label) + "\" fill=\"none\" stroke=\"" + color +
               "\" stroke-width=\"1.8\" points=\"" + pts + "\"/>\n";
        for (auto [m, e] : s.points) {
            svg += "<circle cx=\"" + fmt("%.2f", ax.px(m)) + "\" cy=\"" + fmt("%.2f", ax.py(e)) +
                   "\" r=\"3\" fill=\"" + color + "\"/>\n";
        }
        const double ly = plot_t + 16 + 18 * static_cast<double>(k);
        svg += "<line x1=\"" + fmt("%.1f", plot_r + 12) + "\" x2=\"" + fmt("%.1f", plot_r + 36) + "\" y1=\"" +
               fmt("%.1f", ly) + "\" y2=\"" + fmt("%.1f", ly) + "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + fmt("%.1f", plot_r + 42) + "\" y=\"" + fmt("%.1f", ly + 4) + "\" font-size=\"12\">" +
               escape(s.label) + "</text>\n";
    }

    if (const auto ref = pick_reference(records, scale, options)) svg += triangle(ax, scale, *ref);
    svg += "</svg>\n";
    return svg;
}

void emit_plot(std::span<const ErrorRecord> records, FitScale scale, const std::filesystem::path& path,
               const PlotOptions& options) {
    const std::string svg = render_plot(records, scale, options);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
    f << svg;
    if (!f) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace elm
