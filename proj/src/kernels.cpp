#include "elm/kernels.hpp"

#include <cstddef>

#include "elm/errors.hpp"

#ifdef ELM_HAVE_OPENMP
#include <omp.h>
#endif

namespace elm::kernels {
namespace {

void check_collocation(std::span<const Neuron> neurons, std::span<const double> x, std::span<double> out) {
    if (out.size() != neurons.size() * x.size()) throw ContractViolation("collocation: output size mismatch");
}

void check_network(std::span<const Neuron> neurons, std::span<const double> w, std::span<const double> x,
                   std::span<double> out) {
    if (w.size() != neurons.size()) throw ContractViolation("network kernel: weight count != neuron count");
    if (out.size() != x.size()) throw ContractViolation("network kernel: output size mismatch");
}

void check_barycentric(std::span<const double> nodes, std::span<const double> values,
                       std::span<const double> weights, std::span<const double> x, std::span<double> out) {
    if (values.size() != nodes.size() || weights.size() != nodes.size()) {
        throw ContractViolation("barycentric kernel: nodes/values/weights length mismatch");
    }
    if (out.size() != x.size()) throw ContractViolation("barycentric kernel: output size mismatch");
}

inline double network_point(std::span<const Neuron> neurons, std::span<const double> w, double x, bool derivative) {
    double s = 0.0;
    if (derivative) {
        for (std::size_t i = 0; i < neurons.size(); ++i) s += w[i] * neurons[i].feature_derivative(x);
    } else {
        for (std::size_t i = 0; i < neurons.size(); ++i) s += w[i] * neurons[i].feature(x);
    }
    return s;
}

inline double barycentric_point(std::span<const double> nodes, std::span<const double> values,
                                std::span<const double> weights, double x) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        const double d = x - nodes[j];
        if (d == 0.0) return values[j];
        const double t = weights[j] / d;
        num += t * values[j];
        den += t;
    }
    return num / den;
}

}  // namespace

void collocation_serial(std::span<const Neuron> neurons, std::span<const double> x, std::span<double> out) {
    check_collocation(neurons, x, out);
    const std::size_t n = neurons.size();
    for (std::size_t j = 0; j < x.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) out[j * n + i] = neurons[i].feature(x[j]);
}

void collocation_omp(std::span<const Neuron> neurons, std::span<const double> x, std::span<double> out) {
    check_collocation(neurons, x, out);
    const std::size_t n = neurons.size();
    const auto m = static_cast<std::ptrdiff_t>(x.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < m; ++j) {
        const auto row = static_cast<std::size_t>(j);
        for (std::size_t i = 0; i < n; ++i) out[row * n + i] = neurons[i].feature(x[row]);
    }
}

void network_serial(std::span<const Neuron> neurons, std::span<const double> w, std::span<const double> x,
                    std::span<double> out, bool derivative) {
    check_network(neurons, w, x, out);
    for (std::size_t k = 0; k < x.size(); ++k) out[k] = network_point(neurons, w, x[k], derivative);
}

void network_omp(std::span<const Neuron> neurons, std::span<const double> w, std::span<const double> x,
                 std::span<double> out, bool derivative) {
    check_network(neurons, w, x, out);
    const auto m = static_cast<std::ptrdiff_t>(x.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < m; ++k) {
        const auto idx = static_cast<std::size_t>(k);
        out[idx] = network_point(neurons, w, x[idx], derivative);
    }
}

void barycentric_serial(std::span<const double> nodes, std::span<const double> values,
                        std::span<const double> weights, std::span<const double> x, std::span<double> out) {
    check_barycentric(nodes, values, weights, x, out);
    for (std::size_t k = 0; k < x.size(); ++k) out[k] = barycentric_point(nodes, values, weights, x[k]);
}

void barycentric_omp(std::span<const double> nodes, std::span<const double> values,
                     std::span<const double> weights, std::span<const double> x, std::span<double> out) {
    check_barycentric(nodes, values, weights, x, out);
    const auto m = static_cast<std::ptrdiff_t>(x.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < m; ++k) {
        const auto idx = static_cast<std::size_t>(k);
        out[idx] = barycentric_point(nodes, values, weights, x[idx]);
    }
}

int max_threads() noexcept {
#ifdef ELM_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace elm::kernels
