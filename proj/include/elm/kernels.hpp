#pragma once

// Data-parallel inner loops. Each kernel has a plain serial version, kept
// as the reference the tests compare against, and an OpenMP version used by
// the library. Without OpenMP the *_omp variants run serially.

#include <span>

#include "elm/activations.hpp"

namespace elm::kernels {

/// out[j * N + i] = neurons[i].feature(x[j]); out has x.size() * neurons.size() entries.
void collocation_serial(std::span<const Neuron> neurons, std::span<const double> x, std::span<double> out);
void collocation_omp(std::span<const Neuron> neurons, std::span<const double> x, std::span<double> out);

/// out[k] = sum_i w[i] * neurons[i].feature(x[k]) (or feature_derivative when derivative is set).
void network_serial(std::span<const Neuron> neurons, std::span<const double> w, std::span<const double> x,
                    std::span<double> out, bool derivative = false);
void network_omp(std::span<const Neuron> neurons, std::span<const double> w, std::span<const double> x,
                 std::span<double> out, bool derivative = false);

/// Second-form barycentric evaluation at every x; exact node hits return the stored value.
void barycentric_serial(std::span<const double> nodes, std::span<const double> values,
                        std::span<const double> weights, std::span<const double> x, std::span<double> out);
void barycentric_omp(std::span<const double> nodes, std::span<const double> values,
                     std::span<const double> weights, std::span<const double> x, std::span<double> out);

/// Number of OpenMP threads the *_omp kernels will use (1 without OpenMP).
[[nodiscard]] int max_threads() noexcept;

}  // namespace elm::kernels
