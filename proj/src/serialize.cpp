#include "elm/serialize.hpp"

#include <cmath>
#include <fstream>

#include "elm/errors.hpp"

namespace elm {
namespace {

using nlohmann::json;

json interval_json(const Interval& iv) { return json::array({iv.lo, iv.hi}); }

Interval interval_from(const json& j) {
    if (!j.is_array() || j.size() != 2) throw ValidationError("network JSON: interval must be [lo, hi]");
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

json init_spec_json(const InitSpec& s) {
    return json{{"seed", s.seed},
                {"slope_range", interval_json(s.slope_range)},
                {"center_range", interval_json(s.center_range)},
                {"radius_factor", s.radius_factor},
                {"fixed_radius", s.fixed_radius ? json(*s.fixed_radius) : json(nullptr)},
                {"bias_range", s.bias_range ? interval_json(*s.bias_range) : json(nullptr)}};
}

InitSpec init_spec_from(const json& j, ActivationKind kind, InteractionScheme scheme) {
    InitSpec s{scheme,
               kind,
               j.at("seed").get<std::uint64_t>(),
               interval_from(j.at("slope_range")),
               interval_from(j.at("center_range")),
               j.at("radius_factor").get<double>(),
               std::nullopt,
               std::nullopt};
    if (!j.at("fixed_radius").is_null()) s.fixed_radius = j.at("fixed_radius").get<double>();
    if (!j.at("bias_range").is_null()) s.bias_range = interval_from(j.at("bias_range"));
    return s;
}

}  // namespace

json network_to_json(const TrainedNetwork& net) {
    const auto& hidden = net.hidden();
    json neurons = json::array();
    for (const auto& n : hidden.neurons()) neurons.push_back(json{{"a", n.weight_a()}, {"beta", n.bias_beta()}});
    const auto w = net.external_weights();
    const double cond = net.collocation_condition();
    return json{{"format", kNetworkFormat},
                {"version", kNetworkFormatVersion},
                {"activation", std::string(to_string(hidden.kind()))},
                {"scheme", std::string(to_string(hidden.scheme()))},
                {"mode", std::string(to_string(net.mode()))},
                {"neurons", std::move(neurons)},
                {"weights", std::vector<double>(w.begin(), w.end())},
                {"training_residual", net.training_residual()},
                {"collocation_condition", std::isfinite(cond) ? json(cond) : json(nullptr)},
                {"init_spec", hidden.init_spec() ? init_spec_json(*hidden.init_spec()) : json(nullptr)}};
}

TrainedNetwork network_from_json(const json& doc) {
    try {
        if (doc.at("format").get<std::string>() != kNetworkFormat) {
            throw ValidationError("network JSON: unexpected format tag");
        }
        const int version = doc.at("version").get<int>();
        if (version != kNetworkFormatVersion) {
            throw ValidationError("network JSON: unsupported version " + std::to_string(version));
        }
        const auto kind = parse_activation(doc.at("activation").get<std::string>());
        const auto scheme = parse_scheme(doc.at("scheme").get<std::string>());
        std::vector<Neuron> neurons;
        for (const auto& n : doc.at("neurons")) {
            neurons.emplace_back(kind, scheme, n.at("a").get<double>(), n.at("beta").get<double>());
        }
        std::optional<InitSpec> spec;
        if (!doc.at("init_spec").is_null()) spec = init_spec_from(doc.at("init_spec"), kind, scheme);
        const auto& cond_j = doc.at("collocation_condition");
        const double cond = cond_j.is_null() ? kConditionOverflow : cond_j.get<double>();
        return {HiddenLayer(std::move(neurons), std::move(spec)), doc.at("weights").get<std::vector<double>>(),
                parse_training_mode(doc.at("mode").get<std::string>()), doc.at("training_residual").get<double>(),
                cond};
    } catch (const json::exception& e) {
        throw ValidationError(std::string("network JSON: ") + e.what());
    }
}

void save_network(const TrainedNetwork& net, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << network_to_json(net).dump(2) << '\n';
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

TrainedNetwork load_network(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ValidationError("network JSON: " + std::string(e.what()));
    }
    return network_from_json(doc);
}

}  // namespace elm
