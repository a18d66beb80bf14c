#pragma once

#include "toricoh/cosheaf.hpp"
#include "toricoh/poset.hpp"
#include "toricoh/toric.hpp"

#include <json.hpp>

#include <string>

namespace toricoh {

// order-preserving JSON so reports serialize with stable key order
using Json = nlohmann::ordered_json;

// throws SchemaError with the parser's position diagnostics on bad input
Json load_json_file(const std::string& path);

// {"elements":[...],"covers":[["a","b"],...]}
FinitePoset read_poset_json(const Json& j);

// {"rays":[[...],...],"cones":[[ray indices],...]}
Fan read_fan_json(const Json& j);

// a file holding either of the above; fans are converted to their T-diagram
struct LoadedInput {
    bool has_diagram = false;
    FinitePoset poset; // always set (fan inputs: the face poset of the diagram)
    TDiagram diagram;  // only when has_diagram
};
LoadedInput load_input(const std::string& path);

Json table_json(const GradedTable& t);

} // namespace toricoh
