#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cm2/errors.hpp"
#include "cm2/monomial.hpp"

namespace cm2 {

/// Unordered pair of distinct 1-based vertices, stored with lo < hi.
struct Edge {
    int lo, hi;

    Edge(int u, int v);
    auto operator<=>(const Edge&) const = default;
};

/// Pair of monomial labels on an edge {lo, hi}. `from_lo` is the label
/// contributed by the lo endpoint (the matrix entry sitting in column lo);
/// `from_hi` the one contributed by hi (column hi).
struct EdgeLabels {
    Monomial from_lo;
    Monomial from_hi;
};

/// Tree on vertices 1..n (n >= 2) with an ordered edge list -- the edge order
/// fixes matrix row order downstream -- and optional monomial labels, one
/// pair per edge.
class LabeledTree {
public:
    LabeledTree(int vertex_count, std::vector<Edge> edges);
    LabeledTree(int vertex_count, std::vector<Edge> edges, std::vector<EdgeLabels> labels);

    int vertex_count() const { return vertex_count_; }
    std::span<const Edge> edges() const { return edges_; }
    bool labeled() const { return !labels_.empty(); }
    const EdgeLabels& labels(std::size_t edge_index) const;

    bool has_edge(int u, int v) const;
    /// Label contributed by endpoint v of the edge {v, w}.
    const Monomial& label_from(int v, int w) const;

    /// The unique simple path from i to j, inclusive. i != j required.
    std::vector<int> path(int i, int j) const;

    /// (b, e): second and second-to-last vertices on path(i, j). For an edge
    /// {i, j} this is (j, i).
    std::pair<int, int> path_endpoints(int i, int j) const;

    /// parent[v] = next vertex on the path from v to root; parent[root] = 0.
    std::vector<int> parents_toward(int root) const;

    /// Peels a degree-1 vertex together with its unique remaining edge until
    /// one vertex is left, always taking the smallest eligible vertex.
    std::vector<std::pair<int, Edge>> free_vertex_ordering() const;

    std::vector<Edge> sorted_edges() const;
    bool same_edge_set(const LabeledTree& other) const;

private:
    void check_vertex(int v) const;

    int vertex_count_;
    std::vector<Edge> edges_;
    std::vector<EdgeLabels> labels_;          // empty or parallel to edges_
    std::vector<std::vector<int>> adjacency_; // 1-based
};

/// Compact canonical key for an edge set (vertices must fit in a byte).
std::string edge_set_key(std::span<const Edge> edges);

/// Undirected simple graph on vertices 1..n. No loops, no multi-edges.
class SimpleGraph {
public:
    SimpleGraph(int vertex_count, std::vector<Edge> edges);
    static SimpleGraph complete(int n);

    int vertex_count() const { return vertex_count_; }
    std::span<const Edge> edges() const { return edges_; } // sorted
    bool has_edge(int u, int v) const;
    std::span<const int> neighbors(int v) const;
    bool connected() const;

    bool operator==(const SimpleGraph& other) const {
        return vertex_count_ == other.vertex_count_ && edges_ == other.edges_;
    }

private:
    int vertex_count_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
};

/// Applies a vertex permutation (relabel[v] = new label of v, 1-based).
SimpleGraph relabel_graph(const SimpleGraph& g, std::span<const int> relabel);

/// Streams every spanning tree edge set of a connected graph exactly once,
/// in lexicographic order of the sorted edge lists. Return false from the
/// callback to stop early.
void for_each_spanning_tree(const SimpleGraph& g,
                            const std::function<bool(std::span<const Edge>)>& visit);

/// All spanning trees, lexicographic order. For graphs with at most 12
/// vertices the count is cross-checked against the matrix-tree determinant.
std::vector<LabeledTree> spanning_trees(const SimpleGraph& g);

/// Number of spanning trees by the matrix-tree theorem (integer-exact
/// fraction-free elimination). Supports up to 16 vertices.
long long kirchhoff_spanning_tree_count(const SimpleGraph& g);

/// Perfect elimination ordering if the graph is chordal (maximum cardinality
/// search, smallest-index tie-breaking), nullopt otherwise.
std::optional<std::vector<int>> is_chordal(const SimpleGraph& g);

/// All inclusion-maximal cliques, each sorted ascending, the list sorted
/// lexicographically. Uses the elimination-ordering fast path on chordal
/// graphs and Bron-Kerbosch otherwise.
std::vector<std::vector<int>> maximal_cliques(const SimpleGraph& g);

/// True iff every two distinct maximal cliques share at most one vertex.
bool clique_intersection_condition(const SimpleGraph& g);

/// Maximal cliques C_1..C_r in a leaf order of the clique complex, with the
/// attach vertices k_2..k_r: C_i meets the union of all earlier cliques in
/// exactly {k_i}.
struct CliqueOrder {
    std::vector<std::vector<int>> cliques;
    std::vector<int> attach_vertices; // size cliques.size() - 1
};

struct QuasiForestOrder {
    CliqueOrder order;
    /// relabel[v] = new label; C_1 becomes {1..s_1} and C_i \ {k_i} the next
    /// consecutive block, ascending by old label inside each block.
    std::vector<int> relabel; // index 0 unused
};

/// Requires a connected chordal graph satisfying the clique intersection
/// condition; picks the lexicographically smallest valid clique sequence.
QuasiForestOrder quasi_forest_order(const SimpleGraph& g);

}  // namespace cm2
