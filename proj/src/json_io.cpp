#include "weil/json_io.hpp"

#include "weil/errors.hpp"

namespace weil {

Json presentation_to_json(const Presentation& p) {
    Json j;
    j["vars"] = p.vars;
    Json rels = Json::array();
    for (const Poly& r : p.relations) rels.push_back(r.str(p.vars));
    j["relations"] = std::move(rels);
    j["nil"] = p.nilpotency_bound;
    return j;
}

Presentation presentation_from_json(const Json& j) {
    Presentation p;
    p.vars = j.at("vars").get<std::vector<std::string>>();
    for (const auto& r : j.at("relations"))
        p.relations.push_back(parse_poly(r.get<std::string>(), p.vars));
    p.nilpotency_bound = j.at("nil").get<uint32_t>();
    validate_presentation(p);
    return p;
}

Json algebra_to_json(const WeilAlgebra& A) {
    Json j = presentation_to_json(A.presentation());
    j["basis"] = A.basis_labels();
    size_t d = A.dim();
    Json structure = Json::array();
    for (size_t i = 0; i < d; ++i) {
        Json row = Json::array();
        for (size_t k = 0; k < d; ++k) {
            RatVec dense(d, Rat(0));
            for (const auto& [t, v] : A.product(i, k)) dense[t] = v;
            Json cell = Json::array();
            for (const Rat& q : dense) cell.push_back(rat_str(q));
            row.push_back(std::move(cell));
        }
        structure.push_back(std::move(row));
    }
    j["structure"] = std::move(structure);
    return j;
}

Diagram diagram_from_json(const Json& j) {
    Diagram d;
    std::map<std::string, AlgebraPtr> by_text; // identical texts share one algebra
    for (const auto& [id, text] : j.at("nodes").items()) {
        std::string s = text.get<std::string>();
        auto it = by_text.find(s);
        if (it == by_text.end())
            it = by_text.emplace(s, build_weil_algebra(parse_presentation(s))).first;
        d.nodes.emplace(id, it->second);
    }
    if (j.contains("edges")) {
        for (const auto& e : j.at("edges")) {
            std::string from = e.at("from").get<std::string>();
            std::string to = e.at("to").get<std::string>();
            auto fi = d.nodes.find(from), ti = d.nodes.find(to);
            if (fi == d.nodes.end() || ti == d.nodes.end())
                throw MismatchError("diagram edge references an unknown node");
            std::vector<std::string> images = e.at("images").get<std::vector<std::string>>();
            d.edges.push_back({from, to, hom_from_image_strings(fi->second, ti->second, images)});
        }
    }
    d.validate();
    return d;
}

Diagram diagram_from_json_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, /*allow_exceptions=*/true);
    return diagram_from_json(j);
}

} // namespace weil
