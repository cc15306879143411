#include "cm2/json_io.hpp"

#include <algorithm>

namespace cm2 {

namespace {

void expect(bool cond, const std::string& message) {
    if (!cond)
        throw UsageError(message);
}

int as_vertex(const Json& j, const char* what) {
    expect(j.is_number_integer(), std::string(what) + " must be an integer");
    return j.get<int>();
}

std::vector<Edge> edges_from_json(const Json& j) {
    expect(j.is_array(), "\"edges\" must be an array");
    std::vector<Edge> out;
    out.reserve(j.size());
    for (const Json& e : j) {
        expect(e.is_array() && e.size() == 2, "an edge must be a pair [i, j]");
        out.emplace_back(as_vertex(e[0], "edge endpoint"), as_vertex(e[1], "edge endpoint"));
    }
    return out;
}

Json edges_to_json(std::span<const Edge> edges) {
    Json out = Json::array();
    for (const Edge& e : edges)
        out.push_back(Json::array({e.lo, e.hi}));
    return out;
}

}  // namespace

Json variables_to_json(const VarSet& vars) {
    Json out = Json::array();
    for (const std::string& n : vars->names())
        out.push_back(n);
    return out;
}

VarSet variables_from_json(const Json& j) {
    expect(j.is_array(), "\"variables\" must be an array of names");
    std::vector<std::string> names;
    names.reserve(j.size());
    for (const Json& n : j) {
        expect(n.is_string(), "variable names must be strings");
        names.push_back(n.get<std::string>());
    }
    return make_variables(std::move(names));
}

Json monomial_to_json(const Monomial& m) {
    Json out = Json::array();
    for (const auto& [idx, e] : m.exponents())
        out.push_back(Json::array({m.variables()->name(idx), e}));
    return out;
}

Monomial monomial_from_json(const VarSet& vars, const Json& j) {
    expect(j.is_array(), "a monomial is an array of [name, exponent] pairs");
    Monomial::Exponents exps;
    for (const Json& pair : j) {
        expect(pair.is_array() && pair.size() == 2 && pair[0].is_string() &&
                   pair[1].is_number_integer(),
               "a monomial entry is [name, exponent]");
        auto idx = vars->index_of(pair[0].get<std::string>());
        expect(idx.has_value(), "unknown variable '" + pair[0].get<std::string>() + "'");
        exps.emplace_back(*idx, pair[1].get<std::int64_t>());
    }
    return Monomial(vars, std::move(exps));
}

Json graph_to_json(const SimpleGraph& g) {
    Json out;
    out["vertices"] = g.vertex_count();
    out["edges"] = edges_to_json(g.edges());
    return out;
}

SimpleGraph graph_from_json(const Json& j) {
    expect(j.is_object() && j.contains("vertices") && j.contains("edges"),
           "a graph is { \"vertices\": n, \"edges\": [[i,j], ...] }");
    return SimpleGraph(as_vertex(j["vertices"], "\"vertices\""), edges_from_json(j["edges"]));
}

Json tree_to_json(const LabeledTree& t) {
    Json out;
    out["vertices"] = t.vertex_count();
    out["edges"] = edges_to_json(t.edges());
    if (t.labeled()) {
        out["variables"] = variables_to_json(t.labels(0).from_lo.variables());
        Json labels = Json::array();
        for (std::size_t k = 0; k < t.edges().size(); ++k) {
            const Edge& e = t.edges()[k];
            Json l;
            l["edge"] = Json::array({e.lo, e.hi});
            l["u_ij"] = format(t.labels(k).from_lo);
            l["u_ji"] = format(t.labels(k).from_hi);
            labels.push_back(std::move(l));
        }
        out["labels"] = std::move(labels);
    }
    return out;
}

LabeledTree tree_from_json(const Json& j) {
    expect(j.is_object() && j.contains("vertices") && j.contains("edges"),
           "a tree is { \"vertices\": n, \"edges\": [[i,j], ...] }");
    int n = as_vertex(j["vertices"], "\"vertices\"");
    std::vector<Edge> edges = edges_from_json(j["edges"]);
    if (!j.contains("labels"))
        return LabeledTree(n, std::move(edges));

    expect(j.contains("variables"), "a labeled tree needs a \"variables\" array");
    VarSet vars = variables_from_json(j["variables"]);
    expect(j["labels"].is_array(), "\"labels\" must be an array");

    std::vector<std::optional<EdgeLabels>> by_edge(edges.size());
    for (const Json& l : j["labels"]) {
        expect(l.is_object() && l.contains("edge") && l.contains("u_ij") && l.contains("u_ji"),
               "a label is { \"edge\": [i,j], \"u_ij\": ..., \"u_ji\": ... }");
        std::vector<Edge> where = edges_from_json(Json::array({l["edge"]}));
        auto it = std::find(edges.begin(), edges.end(), where[0]);
        expect(it != edges.end(), "label for an edge that is not in the tree");
        std::size_t k = it - edges.begin();
        expect(!by_edge[k].has_value(), "duplicate label for an edge");
        expect(l["u_ij"].is_string() && l["u_ji"].is_string(), "labels must be monomial strings");
        by_edge[k] = EdgeLabels{parse_monomial(vars, l["u_ij"].get<std::string>()),
                                parse_monomial(vars, l["u_ji"].get<std::string>())};
    }
    std::vector<EdgeLabels> labels;
    labels.reserve(edges.size());
    for (std::size_t k = 0; k < edges.size(); ++k) {
        expect(by_edge[k].has_value(), "every edge needs a label");
        labels.push_back(std::move(*by_edge[k]));
    }
    return LabeledTree(n, std::move(edges), std::move(labels));
}

Json ideal_to_json(const MonomialIdeal& ideal) {
    Json out;
    out["variables"] = variables_to_json(ideal.variables());
    Json gens = Json::array();
    for (const Monomial& g : ideal.generators())
        gens.push_back(format(g));
    out["generators"] = std::move(gens);
    return out;
}

MonomialIdeal ideal_from_json(const Json& j) {
    expect(j.is_object() && j.contains("variables") && j.contains("generators"),
           "an ideal is { \"variables\": [...], \"generators\": [...] }");
    VarSet vars = variables_from_json(j["variables"]);
    expect(j["generators"].is_array(), "\"generators\" must be an array");
    std::vector<Monomial> gens;
    for (const Json& g : j["generators"]) {
        expect(g.is_string(), "generators must be monomial strings");
        gens.push_back(parse_monomial(vars, g.get<std::string>()));
    }
    return MonomialIdeal(vars, std::move(gens));
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
}

}  // namespace cm2
