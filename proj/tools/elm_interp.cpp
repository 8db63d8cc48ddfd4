// Command-line front end: ad-hoc sweeps, the bundled table/figure suites,
// training a single network to JSON and evaluating a saved network.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "elm/csv.hpp"
#include "elm/errors.hpp"
#include "elm/experiment.hpp"
#include "elm/serialize.hpp"
#include "elm/suites.hpp"
#include "elm/svg_plot.hpp"
#include "elm/targets.hpp"

namespace fs = std::filesystem;

namespace {

constexpr const char* kOutputDirEnv = "ELM_INTERP_OUTPUT_DIR";

struct InitFlags {
    std::vector<double> slope_range;
    std::vector<double> center_range;
    std::vector<double> bias_range;
    double radius = 0.0;
    double radius_factor = 0.0;
    double rank_tol = 0.0;

    void add(CLI::App* app) {
        app->add_option("--slope-range", slope_range, "additive slope interval lo,hi")->delimiter(',')->expected(2);
        app->add_option("--center-range", center_range, "centre interval lo,hi")->delimiter(',')->expected(2);
        app->add_option("--bias-range", bias_range, "sample additive biases independently from lo,hi")
            ->delimiter(',')
            ->expected(2);
        app->add_option("--radius", radius, "fixed RBF radius");
        app->add_option("--radius-factor", radius_factor, "RBF radius = factor / sqrt(N)");
        app->add_option("--rank-tol", rank_tol, "relative singular value cutoff");
    }

    [[nodiscard]] elm::InitOverrides overrides() const {
        elm::InitOverrides o;
        if (!slope_range.empty()) o.slope_range = elm::Interval{slope_range[0], slope_range[1]};
        if (!center_range.empty()) o.center_range = elm::Interval{center_range[0], center_range[1]};
        if (!bias_range.empty()) o.bias_range = elm::Interval{bias_range[0], bias_range[1]};
        if (radius > 0.0) o.radius = radius;
        if (radius_factor > 0.0) o.radius_factor = radius_factor;
        return o;
    }
    [[nodiscard]] std::optional<double> tol() const {
        return rank_tol > 0.0 ? std::optional<double>(rank_tol) : std::nullopt;
    }
};

fs::path default_output_dir() {
    if (const char* env = std::getenv(kOutputDirEnv); env && *env) return env;
    return fs::current_path();
}

/// Seed-median table in the layout of the published tables.
void print_table(const std::vector<elm::ErrorRecord>& records, bool derivative) {
    const auto med = elm::median_over_seeds(records);
    std::vector<std::string> cols;
    std::map<std::size_t, std::map<std::string, double>> rows;
    for (const auto& r : med) {
        const std::optional<double> v = derivative ? r.err_deriv : std::optional<double>(r.err);
        if (!v) continue;
        if (std::find(cols.begin(), cols.end(), r.activation) == cols.end()) cols.push_back(r.activation);
        rows[r.m][r.activation] = *v;
    }
    std::sort(cols.begin(), cols.end(),
              [](const auto& a, const auto& b) { return elm::activation_rank(a) < elm::activation_rank(b); });
    std::cout << "M";
    for (const auto& c : cols) std::cout << '\t' << c;
    std::cout << '\n';
    for (const auto& [m, vals] : rows) {
        std::cout << m;
        for (const auto& c : cols) {
            const auto it = vals.find(c);
            std::cout << '\t' << (it == vals.end() ? std::string("-") : elm::format_sci(it->second));
        }
        std::cout << '\n';
    }
}

int report_failures(const std::vector<elm::ErrorRecord>& records) {
    int failed = 0;
    for (const auto& r : records) {
        if (r.ok()) continue;
        ++failed;
        std::cerr << "row failed: " << r.function_id << ' ' << r.node_kind << ' ' << r.activation << " M=" << r.m
                  << " seed=" << r.seed << ": " << *r.error << '\n';
    }
    return failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interpolation with single-hidden-layer ELM networks versus polynomial interpolation"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "run one sweep configured by flags");
    std::string fn = "runge";
    std::string nodes = "chebyshev";
    std::vector<std::string> acts = {"LS", "GRB", "SP"};
    bool no_poly = false;
    std::string mode = "overparam";
    double ratio = 0.0;
    std::vector<std::size_t> m_list = {10, 20, 40, 80, 160, 320};
    std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
    std::uint64_t base_seed = elm::kDefaultBaseSeed;
    std::string metric = "euclidean";
    bool deriv = false;
    std::string out_csv;
    std::string out_svg;
    std::string scale = "semilogy";
    InitFlags run_init;
    run->add_option("--fn", fn, "target function id")->capture_default_str();
    run->add_option("--nodes", nodes, "equispaced | chebyshev | random")->capture_default_str();
    run->add_option("--act", acts, "activations (LS,GRB,SP)")->delimiter(',');
    run->add_flag("--no-poly", no_poly, "skip the polynomial baseline");
    run->add_option("--mode", mode, "square | overparam")->capture_default_str();
    run->add_option("--ratio", ratio, "N/M for overparam mode (default 2)");
    run->add_option("--m-list", m_list, "node counts")->delimiter(',');
    run->add_option("--seeds", seeds, "replicate seeds")->delimiter(',');
    run->add_option("--base-seed", base_seed)->capture_default_str();
    run->add_option("--metric", metric, "euclidean | trapezoid")->capture_default_str();
    run->add_flag("--deriv", deriv, "also measure the derivative error");
    run->add_option("--out-csv", out_csv, "CSV output path");
    run->add_option("--out-svg", out_svg, "SVG output path");
    run->add_option("--scale", scale, "semilogy | loglog")->capture_default_str();
    run_init.add(run);

    // suite
    auto* suite = app.add_subcommand("suite", "run a bundled table/figure suite (or 'all')");
    std::string suite_name;
    std::string out_dir;
    std::uint64_t suite_seed = elm::kDefaultBaseSeed;
    suite->add_option("name", suite_name, "table1..table6, fig1..fig10, all")->required();
    suite->add_option("--out-dir", out_dir, std::string("output directory (default $") + kOutputDirEnv + " or .)");
    suite->add_option("--base-seed", suite_seed)->capture_default_str();

    // train
    auto* trn = app.add_subcommand("train", "train one network and save it as JSON");
    std::string t_fn = "runge";
    std::string t_nodes = "chebyshev";
    std::string t_act = "GRB";
    std::size_t t_m = 40;
    std::string t_mode = "overparam";
    double t_ratio = 2.0;
    std::uint64_t t_seed = 1;
    std::string t_out;
    InitFlags t_init;
    trn->add_option("--fn", t_fn)->capture_default_str();
    trn->add_option("--nodes", t_nodes)->capture_default_str();
    trn->add_option("--act", t_act)->capture_default_str();
    trn->add_option("--m", t_m, "number of nodes")->capture_default_str();
    trn->add_option("--mode", t_mode)->capture_default_str();
    trn->add_option("--ratio", t_ratio)->capture_default_str();
    trn->add_option("--seed", t_seed)->capture_default_str();
    trn->add_option("--out", t_out, "JSON output path")->required();
    t_init.add(trn);

    // eval
    auto* ev = app.add_subcommand("eval", "evaluate a saved network");
    std::string e_net;
    std::vector<double> e_x;
    std::size_t e_grid = 0;
    ev->add_option("--net", e_net, "network JSON")->required()->check(CLI::ExistingFile);
    ev->add_option("--x", e_x, "points to evaluate")->delimiter(',');
    ev->add_option("--grid", e_grid, "evaluate on n equispaced points of [-1, 1]");

    app.add_subcommand("list", "list target functions and suites");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            elm::ExperimentConfig cfg;
            cfg.function_id = fn;
            cfg.node_kind = elm::parse_node_kind(nodes);
            cfg.activations.clear();
            for (const auto& a : acts) cfg.activations.push_back(elm::parse_activation(a));
            cfg.include_poly = !no_poly;
            cfg.mode = elm::parse_training_mode(mode);
            cfg.ratio = ratio > 0.0 ? ratio : (cfg.mode == elm::TrainingMode::Square ? 1.0 : 2.0);
            cfg.m_list = m_list;
            cfg.seeds = seeds;
            cfg.base_seed = base_seed;
            cfg.metric_mode = elm::parse_metric_mode(metric);
            cfg.with_derivative = deriv;
            cfg.init = run_init.overrides();
            cfg.rank_tol = run_init.tol();
            const auto records = elm::run_experiment(cfg);
            print_table(records, false);
            if (deriv) {
                std::cout << "\nderivative error\n";
                print_table(records, true);
            }
            if (!out_csv.empty()) elm::emit_csv(records, out_csv);
            if (!out_svg.empty()) {
                elm::PlotOptions opts;
                opts.title = cfg.function_id + ", " + std::string(elm::to_string(cfg.node_kind)) + ", " +
                             std::string(elm::to_string(cfg.mode));
                elm::emit_plot(records, elm::parse_fit_scale(scale), out_svg, opts);
            }
            return report_failures(records) == 0 ? 0 : 2;
        }

        if (*suite) {
            const fs::path dir = out_dir.empty() ? default_output_dir() : fs::path(out_dir);
            fs::create_directories(dir);
            std::vector<std::string> names = suite_name == "all" ? elm::suite_names()
                                                                 : std::vector<std::string>{suite_name};
            int failed = 0;
            for (const auto& name : names) {
                const auto s = elm::make_suite(name, suite_seed);
                for (const auto& cfg : s.configs) {
                    const auto records = elm::run_experiment(cfg);
                    const std::string stem = elm::output_stem(s, cfg);
                    std::cout << "== " << stem << '\n';
                    print_table(records, s.plot_derivative);
                    elm::emit_csv(records, dir / (stem + ".csv"));
                    elm::PlotOptions opts;
                    opts.title = s.description + " (" + std::string(elm::to_string(cfg.node_kind)) + ")";
                    opts.derivative = s.plot_derivative;
                    elm::emit_plot(records, s.scale, dir / (stem + ".svg"), opts);
                    failed += report_failures(records);
                }
            }
            return failed == 0 ? 0 : 2;
        }

        if (*trn) {
            const auto& f = elm::target_by_id(t_fn);
            const auto kind = elm::parse_node_kind(t_nodes);
            const auto nodeset = kind == elm::NodeKind::UniformRandom ? elm::generate_nodes(kind, t_m, t_seed)
                                                                      : elm::generate_nodes(kind, t_m);
            const auto act = elm::parse_activation(t_act);
            const double r = elm::parse_training_mode(t_mode) == elm::TrainingMode::Square ? 1.0 : t_ratio;
            const auto n = static_cast<std::size_t>(std::llround(r * static_cast<double>(t_m)));
            const auto hidden = elm::init_hidden(n, act, elm::natural_scheme(act), t_seed, t_init.overrides());
            std::vector<double> y;
            for (double x : nodeset.abscissas()) y.push_back(f.eval(x));
            const auto net = elm::train(hidden, nodeset, y, t_init.tol());
            elm::save_network(net, t_out);
            std::cout << "trained " << n << " neurons on " << t_m << " nodes, residual "
                      << elm::format_sci(net.training_residual()) << ", condition "
                      << elm::format_sci(net.collocation_condition()) << '\n';
            return 0;
        }

        if (*ev) {
            const auto net = elm::load_network(e_net);
            std::vector<double> xs = e_x;
            if (e_grid >= 2) {
                for (std::size_t k = 0; k < e_grid; ++k) {
                    xs.push_back(-1.0 + 2.0 * static_cast<double>(k) / static_cast<double>(e_grid - 1));
                }
            }
            std::cout.precision(17);
            for (double x : xs) std::cout << x << '\t' << net.eval(x) << '\t' << net.derivative(x) << '\n';
            return 0;
        }

        std::cout << "functions:";
        for (auto id : elm::target_ids()) std::cout << ' ' << id;
        std::cout << "\nsuites:";
        for (const auto& s : elm::suite_names()) std::cout << ' ' << s;
        std::cout << '\n';
        return 0;
    } catch (const elm::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
