#pragma once

#include <json.hpp>

#include "cm2/chordal.hpp"
#include "cm2/monomial.hpp"
#include "cm2/syzygy.hpp"
#include "cm2/trees_graphs.hpp"

namespace cm2 {

/// Emission preserves insertion order so the wire format is stable.
using Json = nlohmann::ordered_json;

Json variables_to_json(const VarSet& vars);
VarSet variables_from_json(const Json& j);

/// Array of [name, exponent] pairs in canonical order.
Json monomial_to_json(const Monomial& m);
Monomial monomial_from_json(const VarSet& vars, const Json& j);

/// { "vertices": n, "edges": [[i,j], ...] }
Json graph_to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const Json& j);

/// Same shape as a graph; labeled trees additionally carry "variables" and
/// "labels": [{ "edge": [i,j], "u_ij": "<monomial>", "u_ji": "<monomial>" }].
/// u_ij is the label contributed by the smaller endpoint i.
Json tree_to_json(const LabeledTree& t);
LabeledTree tree_from_json(const Json& j);

/// { "variables": [...], "generators": ["<monomial>", ...] }
Json ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const Json& j);

/// Parses a JSON document, mapping syntax errors to ParseError.
Json parse_json(const std::string& text);

}  // namespace cm2
