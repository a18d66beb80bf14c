#include "toricoh/io.hpp"

#include "toricoh/errors.hpp"

#include <fstream>

namespace toricoh {

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open input file: " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("JSON parse error in ") + path + ": " + e.what());
    }
}

FinitePoset read_poset_json(const Json& j) {
    if (!j.is_object() || !j.contains("elements") || !j.contains("covers"))
        throw SchemaError("poset file needs \"elements\" and \"covers\"");
    std::vector<std::string> elems;
    for (auto& e : j.at("elements")) {
        if (!e.is_string()) throw SchemaError("poset elements must be strings");
        elems.push_back(e.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> covers;
    for (auto& c : j.at("covers")) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
            throw SchemaError("each cover must be a pair of element names");
        covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
    return from_cover_relations(elems, covers);
}

Fan read_fan_json(const Json& j) {
    if (!j.is_object() || !j.contains("rays") || !j.contains("cones"))
        throw SchemaError("fan file needs \"rays\" and \"cones\"");
    std::vector<std::vector<Int>> rays;
    int ambient = -1;
    for (auto& r : j.at("rays")) {
        if (!r.is_array() || r.empty()) throw SchemaError("each ray must be a nonempty array");
        std::vector<Int> v;
        for (auto& x : r) {
            if (!x.is_number_integer()) throw SchemaError("ray coordinates must be integers");
            v.push_back(Int(x.get<long long>()));
        }
        if (ambient < 0) ambient = (int)v.size();
        if ((int)v.size() != ambient) throw SchemaError("rays have inconsistent dimensions");
        rays.push_back(std::move(v));
    }
    if (ambient < 0) throw SchemaError("a fan needs at least one ray");
    std::vector<std::vector<int>> cones;
    for (auto& c : j.at("cones")) {
        if (!c.is_array()) throw SchemaError("each cone must be an array of ray indices");
        std::vector<int> v;
        for (auto& x : c) {
            if (!x.is_number_integer()) throw SchemaError("cone entries must be ray indices");
            int i = x.get<int>();
            if (i < 0 || i >= (int)rays.size()) throw SchemaError("cone ray index out of range");
            v.push_back(i);
        }
        cones.push_back(std::move(v));
    }
    return make_fan(ambient, std::move(rays), std::move(cones));
}

LoadedInput load_input(const std::string& path) {
    Json j = load_json_file(path);
    LoadedInput out;
    if (j.is_object() && j.contains("rays")) {
        out.diagram = fan_to_diagram(read_fan_json(j));
        out.poset = out.diagram.poset();
        out.has_diagram = true;
    } else {
        out.poset = read_poset_json(j);
    }
    return out;
}

Json table_json(const GradedTable& t) {
    Json out = Json::array();
    for (auto& row : t) out.push_back(row);
    return out;
}

} // namespace toricoh
