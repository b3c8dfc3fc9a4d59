#include "turan/spec_io.hpp"

#include <fstream>
#include <sstream>

#include "turan/errors.hpp"
#include "turan/multipartite.hpp"

namespace turan {

namespace {

int parse_int(const std::string& text, const std::string& what) {
    if (text.empty()) throw ParseError(what + ": missing number");
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(text, &pos);
    } catch (const std::exception&) {
        throw ParseError(what + ": not a number: " + text);
    }
    if (pos != text.size()) throw ParseError(what + ": trailing characters in " + text);
    return value;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_int(item, what));
    if (out.empty()) throw ParseError(what + ": expected a comma-separated list");
    return out;
}

Graph graph_from_edge_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("graph JSON must be an object with n and edges");
    if (!j["n"].is_number_integer()) throw ParseError("graph JSON: n must be an integer");
    int n = j["n"].get<int>();
    if (n < 1 || n > kMaxVertices) throw ParseError("graph JSON: n out of range 1..64");
    if (!j["edges"].is_array()) throw ParseError("graph JSON: edges must be an array");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw ParseError("graph JSON: each edge must be a pair of integers");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return Graph::from_edges(n, edges);
    } catch (const InvalidInstance& ex) {
        throw ParseError(std::string("graph JSON: ") + ex.what());
    }
}

nlohmann::json parse_json_text(const std::string& text, const std::string& what) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError(what + ": malformed JSON");
    return j;
}

}  // namespace

Graph parse_graph_spec(const std::string& spec) {
    if (spec.empty()) throw ParseError("empty graph spec");

    if (auto colon = spec.find(':'); colon != std::string::npos) {
        std::string head = spec.substr(0, colon);
        std::string rest = spec.substr(colon + 1);
        if (head == "graph6") return parse_graph6(rest);
        if (head == "json") return graph_from_edge_json(parse_json_text(rest, "json: spec"));
        if (head == "file") {
            std::ifstream in(rest);
            if (!in) throw ParseError("file: cannot open " + rest);
            std::stringstream buf;
            buf << in.rdbuf();
            std::string text = buf.str();
            while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
                text.pop_back();
            if (!text.empty() && text.front() == '{') return graph_from_edge_json(parse_json_text(text, rest));
            return parse_graph6(text);
        }
        if (head == "clique") return build({FamilyKind::Clique, {parse_int(rest, spec)}});
        if (head == "path") return build({FamilyKind::Path, {parse_int(rest, spec)}});
        if (head == "cycle") return build({FamilyKind::Cycle, {parse_int(rest, spec)}});
        if (head == "star") return build({FamilyKind::Star, {parse_int(rest, spec)}});
        if (head == "empty") return build({FamilyKind::CompleteMultipartite, {parse_int(rest, spec)}});
        if (head == "turan") return build({FamilyKind::Turan, parse_int_list(rest, spec)});
        if (head == "Kab") return build({FamilyKind::CompleteMultipartite, parse_int_list(rest, spec)});
        if (head == "cliques") return build({FamilyKind::UnionOfCliques, parse_int_list(rest, spec)});
        throw ParseError("unknown spec prefix: " + head);
    }

    if (spec == "F2" || spec == "book") return build({FamilyKind::BookF2, {}});
    if (spec == "petersen") return petersen();

    const char head = spec.front();
    const std::string digits = spec.substr(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("unrecognized graph spec: " + spec);
    if (head == 'K') {
        if (digits.size() == 1) return build({FamilyKind::Clique, {digits[0] - '0'}});
        std::vector<int> parts;
        for (char c : digits) {
            if (c == '0') throw ParseError("part sizes in " + spec + " must be 1..9; use Kab: for larger parts");
            parts.push_back(c - '0');
        }
        return build({FamilyKind::CompleteMultipartite, parts});
    }
    if (head == 'P') return build({FamilyKind::Path, {parse_int(digits, spec)}});
    if (head == 'C') return build({FamilyKind::Cycle, {parse_int(digits, spec)}});
    if (head == 'E') return build({FamilyKind::CompleteMultipartite, {parse_int(digits, spec)}});
    throw ParseError("unrecognized graph spec: " + spec);
}

Graph graph_from_json(const nlohmann::json& j) {
    if (j.is_string()) return parse_graph_spec(j.get<std::string>());
    return graph_from_edge_json(j);
}

FamilyKind family_kind_from_string(const std::string& kind) {
    if (kind == "clique") return FamilyKind::Clique;
    if (kind == "path") return FamilyKind::Path;
    if (kind == "cycle") return FamilyKind::Cycle;
    if (kind == "star") return FamilyKind::Star;
    if (kind == "completeMultipartite") return FamilyKind::CompleteMultipartite;
    if (kind == "turan") return FamilyKind::Turan;
    if (kind == "unionOfCliques") return FamilyKind::UnionOfCliques;
    if (kind == "bookF2") return FamilyKind::BookF2;
    throw ParseError("unknown family kind: " + kind);
}

FamilySpec family_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind")) throw ParseError("family JSON needs a kind field");
    const std::string kind = j["kind"].is_string() ? j["kind"].get<std::string>() : "";
    FamilySpec spec;
    spec.kind = family_kind_from_string(kind);
    if (j.contains("params")) {
        if (!j["params"].is_array()) throw ParseError("family params must be an array");
        for (const auto& p : j["params"]) {
            if (!p.is_number_integer()) throw ParseError("family params must be integers");
            spec.params.push_back(p.get<int>());
        }
    }
    return spec;
}

namespace {

std::uint64_t mask_from_json(const nlohmann::json& j, int n, const std::string& what) {
    if (!j.is_array()) throw ParseError(what + " must be an array of vertices");
    std::uint64_t mask = 0;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ParseError(what + " must contain integers");
        int x = v.get<int>();
        if (x < 0 || x >= n) throw ParseError(what + ": vertex out of range");
        mask |= 1ull << x;
    }
    return mask;
}

std::vector<std::pair<int, int>> pairs_from_json(const nlohmann::json& j, const std::string& what) {
    if (!j.is_array()) throw ParseError(what + " must be an array of pairs");
    std::vector<std::pair<int, int>> out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw ParseError(what + ": each entry must be a pair of integers");
        out.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return out;
}

}  // namespace

H2Spec h2_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("h") || !j.contains("hPrime"))
        throw ParseError("h2 JSON needs h and hPrime");
    H2Spec spec;
    spec.h = graph_from_json(j["h"]);
    spec.h_prime = graph_from_json(j["hPrime"]);
    spec.x = j.contains("x") ? mask_from_json(j["x"], spec.h.n(), "x") : spec.h.full_mask();
    spec.y = j.contains("y") ? mask_from_json(j["y"], spec.h_prime.n(), "y") : spec.h_prime.full_mask();
    if (j.contains("pattern")) spec.pattern = pairs_from_json(j["pattern"], "pattern");
    return spec;
}

H3Spec h3_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("h")) throw ParseError("h3 JSON needs h");
    H3Spec spec;
    spec.h = graph_from_json(j["h"]);
    if (j.contains("anchors")) {
        if (!j["anchors"].is_number_integer()) throw ParseError("anchors must be an integer");
        spec.anchors = j["anchors"].get<int>();
    }
    if (j.contains("extraEdges")) spec.extra_edges = pairs_from_json(j["extraEdges"], "extraEdges");
    return spec;
}

}  // namespace turan
