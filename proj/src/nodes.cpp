#include "elm/nodes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "elm/errors.hpp"
#include "elm/rng.hpp"

namespace elm {

std::string_view to_string(NodeKind k) noexcept {
    switch (k) {
        case NodeKind::EquispacedInclusive: return "equispaced";
        case NodeKind::ChebyshevSecondKind: return "chebyshev";
        case NodeKind::UniformRandom: return "random";
    }
    return "?";
}

NodeKind parse_node_kind(std::string_view s) {
    if (s == "equispaced" || s == "equi") return NodeKind::EquispacedInclusive;
    if (s == "chebyshev" || s == "cheb") return NodeKind::ChebyshevSecondKind;
    if (s == "random" || s == "rand") return NodeKind::UniformRandom;
    throw ValidationError("unknown node kind '" + std::string(s) + "'");
}

NodeSet::NodeSet(NodeKind kind, std::vector<double> abscissas, std::optional<std::uint64_t> seed)
    : kind_(kind), x_(std::move(abscissas)), seed_(seed) {
    if (x_.size() < 2) throw ValidationError("NodeSet: need at least 2 nodes");
    for (std::size_t j = 0; j < x_.size(); ++j) {
        if (!(x_[j] >= -1.0 && x_[j] <= 1.0)) throw ValidationError("NodeSet: node outside [-1, 1]");
        if (j > 0 && !(x_[j] - x_[j - 1] >= kMinNodeGap)) {
            throw ValidationError("NodeSet: nodes must be strictly increasing and distinct");
        }
    }
}

NodeSet generate_nodes(NodeKind kind, std::size_t m, std::optional<std::uint64_t> seed) {
    if (m < 2) throw ValidationError("generate_nodes: M must be >= 2");
    const bool random = kind == NodeKind::UniformRandom;
    if (random && !seed) throw ValidationError("generate_nodes: random nodes need a seed");
    if (!random && seed) throw ValidationError("generate_nodes: seed only applies to random nodes");

    std::vector<double> x(m);
    const double n = static_cast<double>(m - 1);
    switch (kind) {
        case NodeKind::EquispacedInclusive:
            for (std::size_t j = 0; j < m; ++j) x[j] = -1.0 + 2.0 * static_cast<double>(j) / n;
            break;
        case NodeKind::ChebyshevSecondKind:
            // sin form of cos(j pi / n), ascending
            for (std::size_t j = 0; j < m; ++j) {
                x[j] = std::sin(std::numbers::pi * (2.0 * static_cast<double>(j) - n) / (2.0 * n));
            }
            break;
        case NodeKind::UniformRandom: {
            Rng rng(*seed);
            for (;;) {
                for (auto& v : x) v = rng.uniform(-1.0, 1.0);
                std::sort(x.begin(), x.end());
                bool ok = true;
                for (std::size_t j = 1; j < m && ok; ++j) ok = x[j] - x[j - 1] >= kMinNodeGap;
                if (ok) break;
            }
            return NodeSet(kind, std::move(x), seed);
        }
    }
    // mirror the lower half so the set is exactly symmetric about 0
    for (std::size_t j = 0; j < m / 2; ++j) x[m - 1 - j] = -x[j];
    if (m % 2 == 1) x[m / 2] = 0.0;
    x.front() = -1.0;
    x.back() = 1.0;
    return NodeSet(kind, std::move(x));
}

}  // namespace elm
