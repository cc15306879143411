#include "cm2/chordal.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "cm2/generic_ideal.hpp"

namespace cm2 {

AdmissibilityResult is_admissible_taylor_graph(const SimpleGraph& g) {
    if (g.vertex_count() < 2)
        return {false, "graph has fewer than two vertices"};
    if (!g.connected())
        return {false, "graph is not connected"};
    if (!is_chordal(g))
        return {false, "graph is not chordal"};
    if (!clique_intersection_condition(g))
        return {false, "two maximal cliques share more than one vertex"};
    return {true, ""};
}

std::vector<std::string> RealizationRow::text(int columns) const {
    std::vector<std::string> out(columns, "0");
    out[neg_col - 1] = "-" + format(neg_entry);
    out[pos_col - 1] = format(pos_entry);
    return out;
}

ChordalRealization realize(const SimpleGraph& g) {
    AdmissibilityResult adm = is_admissible_taylor_graph(g);
    if (!adm.ok)
        throw DomainError(adm.reason);

    QuasiForestOrder qf = quasi_forest_order(g);
    const std::size_t r = qf.order.cliques.size();
    const int n = g.vertex_count();

    // relabeled cliques and attach vertices
    std::vector<std::vector<int>> cliques(r);
    for (std::size_t i = 0; i < r; ++i) {
        for (int v : qf.order.cliques[i])
            cliques[i].push_back(qf.relabel[v]);
        std::sort(cliques[i].begin(), cliques[i].end());
    }
    std::vector<int> attach(r);  // attach[i] pairs with clique i; attach[0] serves clique 0
    if (r == 1)
        attach[0] = cliques[0].front();  // single clique: smallest vertex takes the role
    else
        attach[0] = qf.relabel[qf.order.attach_vertices[0]];
    for (std::size_t i = 1; i < r; ++i)
        attach[i] = qf.relabel[qf.order.attach_vertices[i - 1]];

    // rows (j, clique i, attach k_i), naturally ordered by j; j values are
    // pairwise distinct and cover every vertex except attach[0]
    struct RowSpec {
        int j, clique, k;
    };
    std::vector<RowSpec> specs;
    specs.reserve(n - 1);
    for (std::size_t i = 0; i < r; ++i)
        for (int j : cliques[i])
            if (j != attach[i])
                specs.push_back({j, static_cast<int>(i) + 1, attach[i]});
    std::sort(specs.begin(), specs.end(), [](const RowSpec& a, const RowSpec& b) { return a.j < b.j; });

    // one fresh variable per (clique, vertex) incidence the rows use
    std::vector<std::pair<int, int>> incidences;
    for (const RowSpec& s : specs) {
        incidences.emplace_back(s.clique, s.j);
        incidences.emplace_back(s.clique, s.k);
    }
    std::sort(incidences.begin(), incidences.end());
    incidences.erase(std::unique(incidences.begin(), incidences.end()), incidences.end());

    std::vector<std::string> names;
    std::map<std::pair<int, int>, std::size_t> var_index;
    for (const auto& [c, v] : incidences) {
        var_index.emplace(std::make_pair(c, v), names.size());
        names.push_back("x" + std::to_string(c) + "_" + std::to_string(v));
    }
    VarSet vars = make_variables(std::move(names));
    auto fresh = [&](int c, int v) { return Monomial::var(vars, var_index.at({c, v})); };

    std::vector<RealizationRow> rows;
    std::vector<Edge> tree_edges;
    std::vector<EdgeLabels> tree_labels;
    rows.reserve(specs.size());
    for (const RowSpec& s : specs) {
        Monomial at_j = fresh(s.clique, s.j);
        Monomial at_k = fresh(s.clique, s.k);
        rows.emplace_back(s.j, s.k, at_j, at_k, s.clique);
        Edge e(s.j, s.k);
        tree_edges.push_back(e);
        if (e.lo == s.j)
            tree_labels.push_back({at_j, at_k});
        else
            tree_labels.push_back({at_k, at_j});
    }

    LabeledTree tree(n, tree_edges, tree_labels);
    MonomialIdeal ideal(vars, build_cm_ideal(tree));
    HilbertBurchMatrix matrix = hilbert_burch_matrix(ideal, tree);

    return ChordalRealization{g,
                              qf.order,
                              qf.relabel,
                              std::move(tree),
                              std::move(rows),
                              std::move(matrix),
                              std::move(ideal)};
}

RealizationCheck verify_realization(const ChordalRealization& r, int jobs) {
    RealizationCheck check;
    check.cm_accepted = is_cm_codim2(r.ideal).accepted;
    check.linear_resolution = has_linear_resolution(r.ideal, jobs);
    check.taylor_graph_matches = taylor_graph(r.ideal, jobs) == relabel_graph(r.graph, r.relabel);
    return check;
}

}  // namespace cm2
