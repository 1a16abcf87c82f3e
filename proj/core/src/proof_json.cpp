#include "b2sr/proof_json.hpp"

#include <map>

#include <json.hpp>

namespace b2sr {

namespace {

using nlohmann::json;

json node_to_json(const DerivationNode& n) {
    json j;
    j["id"] = n.id;
    j["conclusion"] = n.conclusion.str();
    j["rule"] = std::string(rule_name(n.rule));
    j["premises"] = n.premises;
    if (n.instance) {
        j["axiom"] = std::string(axiom_name(n.instance->axiom));
        json s;
        s["x1"] = to_string(n.instance->subst.x1);
        s["x2"] = to_string(n.instance->subst.x2);
        if (n.instance->axiom == AxiomName::crossing) {
            s["y"] = to_string(n.instance->subst.y);
        }
        s["z1"] = to_string(n.instance->subst.z1);
        s["z2"] = to_string(n.instance->subst.z2);
        j["subst"] = std::move(s);
    }
    return j;
}

json derivation_to_json_value(const Derivation& d,
                              const std::string& direction) {
    json j;
    j["direction"] = direction;
    j["goal"] = d.goal.str();
    j["roots"] = d.roots;
    json nodes = json::array();
    for (const DerivationNode& n : d.nodes) {
        nodes.push_back(node_to_json(n));
    }
    j["nodes"] = std::move(nodes);
    return j;
}

[[noreturn]] void bail(const std::string& msg) { throw ProofJsonError(msg); }

Polynomial parse_poly_field(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_string()) {
        bail(std::string("missing or non-string \"") + field + "\" field");
    }
    try {
        return parse_polynomial(j[field].get<std::string>());
    } catch (const ParseError& e) {
        bail(std::string("bad polynomial in \"") + field + "\": " + e.what());
    }
}

LetterSeq parse_seq_field(const json& subst, const char* field) {
    if (!subst.contains(field)) return {};
    if (!subst[field].is_string()) {
        bail(std::string("substitution entry \"") + field +
             "\" is not a string");
    }
    try {
        return parse_letter_seq(subst[field].get<std::string>());
    } catch (const ParseError& e) {
        bail(std::string("bad substitution entry \"") + field +
             "\": " + e.what());
    }
}

DirectedDerivation parse_one(const json& j) {
    if (!j.is_object()) bail("derivation is not a JSON object");
    if (!j.contains("direction") || !j["direction"].is_string()) {
        bail("missing or non-string \"direction\" field");
    }
    std::string direction = j["direction"].get<std::string>();
    if (direction != "lhs<=rhs" && direction != "rhs<=lhs") {
        bail("direction must be \"lhs<=rhs\" or \"rhs<=lhs\", got \"" +
             direction + '"');
    }

    DirectedDerivation out{Derivation{parse_poly_field(j, "goal"), {}, {}},
                           std::move(direction)};

    if (!j.contains("nodes") || !j["nodes"].is_array() ||
        j["nodes"].empty()) {
        bail("missing, non-array, or empty \"nodes\" field");
    }

    std::map<std::uint64_t, std::uint32_t> id_map;
    for (const json& nj : j["nodes"]) {
        if (!nj.is_object() || !nj.contains("id") ||
            !nj["id"].is_number_unsigned()) {
            bail("node without an unsigned \"id\"");
        }
        auto dense = static_cast<std::uint32_t>(id_map.size());
        if (!id_map.emplace(nj["id"].get<std::uint64_t>(), dense).second) {
            bail("duplicate node id " + nj["id"].dump());
        }
    }
    auto lookup = [&id_map](const json& idj) -> std::uint32_t {
        if (!idj.is_number_unsigned()) bail("non-unsigned id reference");
        auto it = id_map.find(idj.get<std::uint64_t>());
        if (it == id_map.end()) {
            bail("reference to unknown node id " + idj.dump());
        }
        return it->second;
    };

    for (const json& nj : j["nodes"]) {
        if (!nj.contains("rule") || !nj["rule"].is_string()) {
            bail("missing or non-string \"rule\" field");
        }
        std::string rule = nj["rule"].get<std::string>();
        Rule parsed_rule = Rule::summand;
        if (rule == "summand") {
            parsed_rule = Rule::summand;
        } else if (rule == "sum") {
            parsed_rule = Rule::sum;
        } else if (rule == "axiom") {
            parsed_rule = Rule::axiom;
        } else {
            bail("unknown rule \"" + rule + '"');
        }
        DerivationNode node{
            static_cast<std::uint32_t>(out.derivation.nodes.size()),
            parse_poly_field(nj, "conclusion"), parsed_rule, {}, {}};
        if (nj.contains("premises")) {
            if (!nj["premises"].is_array()) {
                bail("\"premises\" is not an array");
            }
            for (const json& pj : nj["premises"]) {
                node.premises.push_back(lookup(pj));
            }
        }
        if (node.rule == Rule::axiom) {
            if (!nj.contains("axiom") || !nj["axiom"].is_string()) {
                bail("axiom node without an \"axiom\" name");
            }
            std::string ax = nj["axiom"].get<std::string>();
            AxiomName name;
            if (ax == "rook") {
                name = AxiomName::rook;
            } else if (ax == "crossing") {
                name = AxiomName::crossing;
            } else {
                bail("unknown axiom \"" + ax + '"');
            }
            if (!nj.contains("subst") || !nj["subst"].is_object()) {
                bail("axiom node without a \"subst\" object");
            }
            const json& sj = nj["subst"];
            AxiomSubstitution subst{
                parse_seq_field(sj, "x1"), parse_seq_field(sj, "x2"),
                parse_seq_field(sj, "y"), parse_seq_field(sj, "z1"),
                parse_seq_field(sj, "z2")};
            std::optional<AxiomInstance> inst =
                AxiomInstance::make(name, std::move(subst));
            if (!inst) {
                bail("substitution does not fit the " + ax + " axiom");
            }
            node.instance = std::move(*inst);
        } else if (nj.contains("axiom") || nj.contains("subst")) {
            bail("non-axiom node carries axiom fields");
        }
        out.derivation.nodes.push_back(std::move(node));
    }

    if (!j.contains("roots") || !j["roots"].is_array()) {
        bail("missing or non-array \"roots\" field");
    }
    for (const json& rj : j["roots"]) {
        out.derivation.roots.push_back(lookup(rj));
    }
    return out;
}

}  // namespace

std::string derivation_to_json(const Derivation& d,
                               const std::string& direction, int indent) {
    return derivation_to_json_value(d, direction).dump(indent);
}

std::string derivation_pair_to_json(const DerivationPair& pair, int indent) {
    json arr = json::array();
    arr.push_back(derivation_to_json_value(pair.forward, "lhs<=rhs"));
    arr.push_back(derivation_to_json_value(pair.backward, "rhs<=lhs"));
    return arr.dump(indent);
}

std::vector<DirectedDerivation> derivations_from_json(
    const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ProofJsonError(std::string("invalid JSON: ") + e.what());
    }
    std::vector<DirectedDerivation> out;
    if (j.is_object()) {
        out.push_back(parse_one(j));
    } else if (j.is_array()) {
        if (j.empty()) bail("empty derivation array");
        for (const json& el : j) {
            out.push_back(parse_one(el));
        }
    } else {
        bail("top level must be an object or an array");
    }
    return out;
}

}  // namespace b2sr
