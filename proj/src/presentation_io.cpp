#include "rk/presentation_io.hpp"

#include <json.hpp>

namespace rk {

using nlohmann::json;

namespace {

std::vector<std::vector<RawPresentation::Term>> parseRelations(const json& arr,
                                                               const char* where)
{
    std::vector<std::vector<RawPresentation::Term>> out;
    if (!arr.is_array()) throw std::invalid_argument(std::string(where) + ": array expected");
    for (const auto& rel : arr) {
        std::vector<RawPresentation::Term> terms;
        if (!rel.is_array())
            throw std::invalid_argument(std::string(where) + ": each relation is an array");
        for (const auto& term : rel) {
            if (!term.is_array() || term.size() != 2 || !term[0].is_array() ||
                term[0].size() != 2)
                throw std::invalid_argument(std::string(where) +
                                            ": term must be [[i,j],\"coeff\"]");
            RawPresentation::Term t;
            t.i = term[0][0].get<int>();
            t.j = term[0][1].get<int>();
            if (term[1].is_string()) t.coeff = term[1].get<std::string>();
            else t.coeff = term[1].dump();
            terms.push_back(std::move(t));
        }
        out.push_back(std::move(terms));
    }
    return out;
}

json relationsToJson(const std::vector<std::vector<RawPresentation::Term>>& rels,
                     const std::string& fieldKind, std::uint64_t prime)
{
    json arr = json::array();
    for (const auto& rel : rels) {
        json r = json::array();
        for (const auto& t : rel) {
            std::string canonical;
            if (fieldKind == "prime") {
                Fp::setModulus(prime);
                canonical = toString(parseFp(t.coeff));
            } else {
                canonical = toString(parseRational(t.coeff));
            }
            r.push_back(json::array({json::array({t.i, t.j}), canonical}));
        }
        arr.push_back(std::move(r));
    }
    return arr;
}

}  // namespace

RawPresentation parsePresentationJson(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("presentation parse error: ") + e.what());
    }
    RawPresentation p;
    if (!j.contains("name") || !j["name"].is_string())
        throw std::invalid_argument("presentation: string field 'name' required");
    p.name = j["name"].get<std::string>();
    if (j.contains("field")) {
        const auto& f = j["field"];
        if (!f.contains("kind")) throw std::invalid_argument("field.kind required");
        p.fieldKind = f["kind"].get<std::string>();
        if (p.fieldKind == "prime") {
            if (!f.contains("p")) throw std::invalid_argument("field.p required for prime");
            p.prime = f["p"].get<std::uint64_t>();
        } else if (p.fieldKind != "rational") {
            throw std::invalid_argument("field.kind must be 'rational' or 'prime'");
        }
    }
    if (!j.contains("generators") || !j["generators"].is_array())
        throw std::invalid_argument("presentation: array field 'generators' required");
    for (const auto& g : j["generators"]) p.generators.push_back(g.get<std::string>());
    if (j.contains("weights")) {
        for (const auto& w : j["weights"]) {
            std::vector<int> row;
            for (const auto& x : w) row.push_back(x.get<int>());
            p.weights.push_back(std::move(row));
        }
    }
    if (j.contains("relations")) p.relations = parseRelations(j["relations"], "relations");

    if (j.contains("module_generators")) {
        p.hasModule = true;
        if (!j.contains("side")) throw std::invalid_argument("module: 'side' required");
        p.side = j["side"].get<std::string>();
        if (p.side != "left" && p.side != "right")
            throw std::invalid_argument("module: side must be 'left' or 'right'");
        p.initialDegree = j.value("initial_degree", 0);
        for (const auto& g : j["module_generators"])
            p.moduleGenerators.push_back(g.get<std::string>());
        if (j.contains("module_weights"))
            for (const auto& w : j["module_weights"]) {
                std::vector<int> row;
                for (const auto& x : w) row.push_back(x.get<int>());
                p.moduleWeights.push_back(std::move(row));
            }
        if (j.contains("module_relations"))
            p.moduleRelations = parseRelations(j["module_relations"], "module_relations");
    }
    return p;
}

std::string canonicalPresentationJson(const RawPresentation& p)
{
    json j;  // nlohmann::json orders keys lexicographically
    j["name"] = p.name;
    if (p.fieldKind == "prime")
        j["field"] = {{"kind", "prime"}, {"p", p.prime}};
    else
        j["field"] = {{"kind", "rational"}};
    j["generators"] = p.generators;
    if (!p.weights.empty()) j["weights"] = p.weights;
    j["relations"] = relationsToJson(p.relations, p.fieldKind, p.prime);
    if (p.hasModule) {
        j["side"] = p.side;
        j["initial_degree"] = p.initialDegree;
        j["module_generators"] = p.moduleGenerators;
        if (!p.moduleWeights.empty()) j["module_weights"] = p.moduleWeights;
        j["module_relations"] = relationsToJson(p.moduleRelations, p.fieldKind, p.prime);
    }
    return j.dump();
}

}  // namespace rk
