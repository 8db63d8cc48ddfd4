#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "elm/network.hpp"

namespace elm {

inline constexpr const char* kNetworkFormat = "elm-interp/network";
inline constexpr int kNetworkFormatVersion = 1;

/// Versioned JSON document for a trained network. Layout:
///
///   {
///     "format": "elm-interp/network", "version": 1,
///     "activation": "LS" | "GRB" | "SP", "scheme": "additive" | "distance",
///     "mode": "square" | "overparam",
///     "neurons": [{"a": <slope or centre>, "beta": <offset or radius>}, ...],
///     "weights": [...],
///     "training_residual": <real>,
///     "collocation_condition": <real> | null,      // null = overflow
///     "init_spec": null | {"seed", "slope_range": [lo, hi], "center_range": [lo, hi],
///                          "radius_factor", "fixed_radius": <real>|null,
///                          "bias_range": [lo, hi]|null}
///   }
///
/// Doubles are written in shortest round-trip form, so load(save(net)) is exact.
[[nodiscard]] nlohmann::json network_to_json(const TrainedNetwork& net);
/// Throws ValidationError on a wrong format tag, unsupported version or malformed fields.
[[nodiscard]] TrainedNetwork network_from_json(const nlohmann::json& doc);

void save_network(const TrainedNetwork& net, const std::filesystem::path& path);
[[nodiscard]] TrainedNetwork load_network(const std::filesystem::path& path);

}  // namespace elm
