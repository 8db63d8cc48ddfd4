#include "elm/barycentric.hpp"

#include <algorithm>
#include <cmath>

#include "elm/errors.hpp"
#include "elm/kernels.hpp"

namespace elm {

std::vector<double> barycentric_weights(std::span<const double> nodes) {
    const std::size_t m = nodes.size();
    if (m < 2) throw ValidationError("barycentric_weights: need at least 2 nodes");
    // Plain products, renormalised with frexp after every factor so the binary
    // exponent is carried separately. Summing logs instead loses about a
    // decade of accuracy at M in the hundreds.
    std::vector<double> mant(m);
    std::vector<long> expo(m);
    for (std::size_t j = 0; j < m; ++j) {
        double p = 1.0;
        long e = 0;
        for (std::size_t k = 0; k < m; ++k) {
            if (k == j) continue;
            const double d = nodes[j] - nodes[k];
            if (d == 0.0) throw ValidationError("barycentric_weights: duplicate nodes");
            int step = 0;
            p = std::frexp(p * d, &step);
            e += step;
        }
        mant[j] = p;
        expo[j] = e;
    }
    const long emin = *std::min_element(expo.begin(), expo.end());
    std::vector<double> w(m);
    double top = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        const long shift = std::min<long>(expo[j] - emin, 4000);
        w[j] = std::ldexp(1.0 / mant[j], -static_cast<int>(shift));
        top = std::max(top, std::abs(w[j]));
    }
    for (double& v : w) v /= top;
    return w;
}

std::vector<double> barycentric_weights(const NodeSet& nodes) { return barycentric_weights(nodes.abscissas()); }

BarycentricInterpolant::BarycentricInterpolant(NodeSet nodes, std::vector<double> values)
    : nodes_(std::move(nodes)), values_(std::move(values)), weights_(barycentric_weights(nodes_)) {
    if (values_.size() != nodes_.size()) throw ContractViolation("BarycentricInterpolant: values length != nodes");
}

double BarycentricInterpolant::eval(double x) const {
    double out = 0.0;
    kernels::barycentric_serial(nodes_.abscissas(), values_, weights_, std::span<const double>(&x, 1),
                                std::span<double>(&out, 1));
    return out;
}

std::vector<double> BarycentricInterpolant::eval(std::span<const double> xs) const {
    std::vector<double> out(xs.size());
    kernels::barycentric_omp(nodes_.abscissas(), values_, weights_, xs, out);
    return out;
}

}  // namespace elm
