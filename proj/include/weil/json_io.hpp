// JSON shapes for presentations, algebras, diagrams and suite reports.
#pragma once

#include <json.hpp>

#include "weil/category.hpp"

namespace weil {

using Json = nlohmann::json;

// {"vars": [...], "relations": [...], "nil": k}
Json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);

// {"vars", "relations", "nil", "basis", "structure"} with structure a
// dim x dim x dim array of rational strings "p/q".
Json algebra_to_json(const WeilAlgebra& A);

// {"nodes": {id: presentation-string},
//  "edges": [{"from": id, "to": id, "images": [element-strings]}]}
Diagram diagram_from_json(const Json& j);
Diagram diagram_from_json_text(const std::string& text);

} // namespace weil
