#include "surflink/json_io.hpp"

#include <istream>

#include <json.hpp>

namespace surflink {

using nlohmann::json;

static DiagramOnSurface map_from_parsed(const json& j) {
    if (!j.is_object()) throw MapError(MapErrorCode::BadInput, "top-level JSON must be an object");
    for (const char* key : {"darts", "sigma", "alpha", "over_even_pair"})
        if (!j.contains(key))
            throw MapError(MapErrorCode::BadInput, std::string("missing field: ") + key);

    const int n = j.at("darts").get<int>();
    std::vector<DartId> sigma = j.at("sigma").get<std::vector<DartId>>();
    std::vector<DartId> alpha = j.at("alpha").get<std::vector<DartId>>();
    std::vector<bool> over = j.at("over_even_pair").get<std::vector<bool>>();
    if (static_cast<int>(sigma.size()) != n || static_cast<int>(alpha.size()) != n)
        throw MapError(MapErrorCode::BadInput, "darts count does not match table sizes");

    std::vector<Region> regions;
    if (j.contains("regions")) {
        for (const json& jr : j.at("regions")) {
            Region r;
            r.walks = jr.at("walks").get<std::vector<int>>();
            r.genus = jr.value("genus", 0);
            regions.push_back(std::move(r));
        }
    }
    std::map<std::string, std::vector<int>> marked;
    if (j.contains("marked_curves")) {
        for (auto it = j.at("marked_curves").begin(); it != j.at("marked_curves").end(); ++it)
            marked[it.key()] = it.value().get<std::vector<int>>();
    }
    return build_map(std::move(sigma), std::move(alpha), std::move(over),
                     std::move(regions), std::move(marked));
}

DiagramOnSurface map_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw MapError(MapErrorCode::BadInput, std::string("JSON parse error: ") + e.what());
    }
    return map_from_parsed(j);
}

DiagramOnSurface map_from_stream(std::istream& in) {
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw MapError(MapErrorCode::BadInput, std::string("JSON parse error: ") + e.what());
    }
    return map_from_parsed(j);
}

std::string map_to_json(const DiagramOnSurface& map, bool pretty) {
    json j;
    j["darts"] = map.dart_count();
    j["sigma"] = map.sigma_table();
    j["alpha"] = map.alpha_table();
    j["over_even_pair"] = map.over_even_pair_table();
    json jr = json::array();
    for (const Region& r : map.regions()) {
        jr.push_back(json{{"walks", r.walks}, {"genus", r.genus}});
    }
    j["regions"] = jr;
    if (!map.marked_curves().empty()) {
        json jm = json::object();
        for (const auto& [name, cycle] : map.marked_curves()) jm[name] = cycle;
        j["marked_curves"] = jm;
    }
    return pretty ? j.dump(2) : j.dump();
}

}  // namespace surflink
