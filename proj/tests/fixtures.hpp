#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "cm2/monomial.hpp"
#include "cm2/syzygy.hpp"
#include "cm2/trees_graphs.hpp"

namespace cm2::testing {

inline std::vector<Edge> edges(std::initializer_list<std::pair<int, int>> pairs) {
    std::vector<Edge> out;
    for (auto [a, b] : pairs)
        out.emplace_back(a, b);
    return out;
}

inline LabeledTree tree(int n, std::initializer_list<std::pair<int, int>> pairs) {
    return LabeledTree(n, edges(pairs));
}

inline SimpleGraph graph(int n, std::initializer_list<std::pair<int, int>> pairs) {
    return SimpleGraph(n, edges(pairs));
}

inline Monomial mono(const VarSet& vars, const char* text) { return parse_monomial(vars, text); }

/// The running 4-generator example: (x4*x5*x6, x1*x5*x6, x1*x2*x6, x1*x2*x3*x5)
/// over x1..x6. Its relation trees are the path 1-2-3-4 and the tree
/// {1,2},{2,3},{2,4}; the third spanning tree of its Taylor graph fails.
inline MonomialIdeal example_ideal() {
    VarSet vars = standard_variables(6);
    return MonomialIdeal(vars, {mono(vars, "x4*x5*x6"), mono(vars, "x1*x5*x6"),
                                mono(vars, "x1*x2*x6"), mono(vars, "x1*x2*x3*x5")});
}

inline std::vector<Edge> gamma1() { return edges({{1, 2}, {2, 3}, {3, 4}}); }
inline std::vector<Edge> gamma2() { return edges({{1, 2}, {2, 3}, {2, 4}}); }
inline std::vector<Edge> gamma3() { return edges({{1, 2}, {2, 4}, {3, 4}}); }

/// Two triangles joined at a cut vertex plus two pendant edges; the worked
/// 7-vertex example for the chordal realization.
inline SimpleGraph clique_tree_graph() {
    return graph(7, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}, {5, 6}, {5, 7}});
}

/// Generators u_i = product of all variables except x_i, over x1..xn. Every
/// tree on [n] is a relation tree of this ideal.
inline MonomialIdeal squarefree_complement_ideal(int n) {
    VarSet vars = standard_variables(n);
    std::vector<Monomial> gens;
    for (int i = 1; i <= n; ++i) {
        Monomial::Exponents exps;
        for (int k = 1; k <= n; ++k)
            if (k != i)
                exps.emplace_back(k - 1, 1);
        gens.emplace_back(vars, std::move(exps));
    }
    return MonomialIdeal(vars, std::move(gens));
}

}  // namespace cm2::testing
