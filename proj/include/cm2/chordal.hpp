#pragma once

#include <string>
#include <vector>

#include "cm2/syzygy.hpp"
#include "cm2/trees_graphs.hpp"

namespace cm2 {

struct AdmissibilityResult {
    bool ok = false;
    std::string reason;  // empty when ok
};

/// A graph is an admissible Taylor graph when it is connected, chordal, has
/// at least two vertices and no two of its maximal cliques share more than
/// one vertex. Admissibility classifies graphs, not ideals: the Taylor graph
/// of an ideal without linear resolution can still be admissible.
AdmissibilityResult is_admissible_taylor_graph(const SimpleGraph& g);

/// One row of the constructed matrix, in the orientation the construction
/// produces: the negative entry sits at the non-attach vertex's column.
struct RealizationRow {
    int neg_col = 0;
    int pos_col = 0;
    Monomial neg_entry;
    Monomial pos_entry;
    int clique_index = 0;  // 1-based clique the row's edge belongs to

    RealizationRow(int neg_col, int pos_col, Monomial neg, Monomial pos, int clique)
        : neg_col(neg_col), pos_col(pos_col), neg_entry(std::move(neg)),
          pos_entry(std::move(pos)), clique_index(clique) {}

    std::vector<std::string> text(int columns) const;
};

/// Everything the realization of an admissible graph produces: the clique
/// order and vertex relabeling, the spanning tree built from the attach
/// vertices, the matrix with one fresh variable per (clique, vertex)
/// incidence, and the resulting equigenerated ideal.
struct ChordalRealization {
    SimpleGraph graph;               // input, original labels
    CliqueOrder clique_order;        // original labels
    std::vector<int> relabel;        // old -> new, 1-based
    LabeledTree tree;                // relabeled vertices, edges in row order
    std::vector<RealizationRow> matrix_rows;
    HilbertBurchMatrix matrix;       // canonical row orientation
    MonomialIdeal ideal;
};

/// Realizes an admissible graph as the Taylor graph of a Cohen-Macaulay
/// codimension-2 ideal with linear resolution.
ChordalRealization realize(const SimpleGraph& g);

struct RealizationCheck {
    bool cm_accepted = false;
    bool linear_resolution = false;
    bool taylor_graph_matches = false;

    bool ok() const { return cm_accepted && linear_resolution && taylor_graph_matches; }
};

/// Recomputes the full pipeline on the realized ideal: the CM verdict, the
/// linear-resolution test, and whether the Taylor graph reproduces the input
/// graph under the realization's relabeling.
RealizationCheck verify_realization(const ChordalRealization& r, int jobs = 1);

}  // namespace cm2
