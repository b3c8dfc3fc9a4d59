#pragma once

// Instance parsing: the graph shorthand grammar and JSON instance files.
//
// Shorthand forms (documented in the README):
//   K5          clique (single digit)
//   K222        complete multipartite, one digit per part
//   P4 C5 E3    path, cycle, empty graph
//   F2          two triangles sharing a vertex
//   petersen    the Petersen graph
//   book        alias of F2
//   clique:n path:n cycle:n star:m empty:n        multi-digit sizes
//   turan:n,k   Kab:s1,s2,...   cliques:s1,s2,...
//   graph6:TEXT json:{"n":..,"edges":[[u,v],..]}  file:PATH

#include <string>

#include "json.hpp"
#include "turan/constructions.hpp"
#include "turan/graph.hpp"

namespace turan {

Graph parse_graph_spec(const std::string& spec);

FamilyKind family_kind_from_string(const std::string& kind);

// A graph field in a JSON instance: either a shorthand string or an
// object {"n": int, "edges": [[u, v], ...]}.
Graph graph_from_json(const nlohmann::json& j);

FamilySpec family_from_json(const nlohmann::json& j);
H2Spec h2_from_json(const nlohmann::json& j);
H3Spec h3_from_json(const nlohmann::json& j);

}  // namespace turan
