#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cm2/monomial.hpp"
#include "cm2/trees_graphs.hpp"

namespace cm2 {

/// Monomial ideal given by its unique minimal monomial generators. The
/// constructor reduces the input to that minimal set (drops duplicates and
/// every generator divisible by another one) while keeping the input order.
class MonomialIdeal {
public:
    MonomialIdeal(VarSet vars, std::vector<Monomial> gens);

    const VarSet& variables() const { return vars_; }
    std::span<const Monomial> generators() const { return gens_; }
    std::size_t generator_count() const { return gens_.size(); }
    const Monomial& generator(int index_1based) const;

private:
    VarSet vars_;
    std::vector<Monomial> gens_;
};

/// The canonical first syzygy between generators u_i and u_j (i < j): the
/// row with -col_i in column i and +col_j in column j, where
/// col_i = u_j/gcd(u_i,u_j) and col_j = u_i/gcd(u_i,u_j). Both entries are
/// coprime and col_i * u_i = col_j * u_j = lcm(u_i, u_j).
struct TaylorRelation {
    int i, j;
    Monomial col_i;
    Monomial col_j;
    Monomial degree;  // lcm(u_i, u_j)
};

/// All C(m+1, 2) Taylor relations in lexicographic pair order.
std::vector<TaylorRelation> taylor_relations(const MonomialIdeal& ideal);

/// The Taylor relation of one generator pair.
TaylorRelation taylor_relation(const MonomialIdeal& ideal, int i, int j);

/// Decides whether the tree's m Taylor relations generate the whole syzygy
/// module: true iff for every pair i < j each edge {a, b} on the tree path
/// from i to j satisfies lcm(u_a, u_b) | lcm(u_i, u_j). Sufficiency is the
/// telescoping identity along the path; necessity follows by restricting to
/// the multidegree lcm(u_i, u_j).
bool tree_generates(const MonomialIdeal& ideal, const LabeledTree& tree);

/// A copy of the tree carrying the Taylor labels of the ideal: the edge
/// {a, b} gets (u_b/gcd(u_a,u_b)) from a and (u_a/gcd(u_a,u_b)) from b.
LabeledTree attach_taylor_labels(const MonomialIdeal& ideal, const LabeledTree& tree);

/// All relation trees of the ideal, i.e. every tree on the generator indices
/// whose Taylor relations form a Hilbert-Burch matrix. Trees come labeled,
/// in lexicographic order of their sorted edge lists. Requires a CM ideal of
/// codimension 2 (checked). `jobs` > 1 parallelizes the candidate filter;
/// the result is identical for any job count.
std::vector<LabeledTree> relation_trees(const MonomialIdeal& ideal, int jobs = 1);

/// m x (m+1) matrix whose rows are the Taylor relations of a relation tree,
/// one per edge in tree edge order. Construction re-verifies that the
/// product-formula minors reproduce the generators.
class HilbertBurchMatrix {
public:
    HilbertBurchMatrix(MonomialIdeal ideal, LabeledTree tree, std::vector<TaylorRelation> rows);

    const MonomialIdeal& ideal() const { return ideal_; }
    const LabeledTree& tree() const { return tree_; }
    std::span<const TaylorRelation> rows() const { return rows_; }

    /// Entries of one row as strings over the full column range, e.g.
    /// "-x1", "0", "x4", ... (canonical orientation: minus at column i < j).
    std::vector<std::string> row_text(std::size_t row) const;

private:
    MonomialIdeal ideal_;
    LabeledTree tree_;
    std::vector<TaylorRelation> rows_;
};

HilbertBurchMatrix hilbert_burch_matrix(const MonomialIdeal& ideal, const LabeledTree& tree);

enum class CmRejectReason { NonunitGcd, NoGeneratingTree, MinorsMismatch };

std::string to_string(CmRejectReason reason);

struct CmVerdict {
    bool accepted = false;
    std::optional<LabeledTree> witness;       // labeled relation tree when accepted
    std::optional<CmRejectReason> reason;     // set when rejected
};

/// Accepts iff the generators have unit gcd, some tree generates the syzygy
/// module, and that tree's product-formula minors reproduce the generators.
/// The witness is the first tree in lexicographic edge-list order.
CmVerdict is_cm_codim2(const MonomialIdeal& ideal);

/// Union of the edge sets of all relation trees. Requires a CM ideal.
SimpleGraph taylor_graph(const MonomialIdeal& ideal, int jobs = 1);

/// True iff the generators share one degree d and some relation tree has all
/// its Taylor relations in degree d+1 (equivalently: a Hilbert-Burch matrix
/// with linear entries). Requires a CM ideal.
bool has_linear_resolution(const MonomialIdeal& ideal, int jobs = 1);

struct SpanningComparison {
    std::size_t relation_tree_count = 0;
    std::size_t spanning_tree_count = 0;
    std::vector<LabeledTree> spanning_only;  // spanning trees of the Taylor graph that are not relation trees
    bool equal = false;
};

/// Compares the relation trees with the spanning trees of the Taylor graph.
SpanningComparison spanning_equals_relation(const MonomialIdeal& ideal, int jobs = 1);

struct ExchangeCounterexample {
    std::size_t from_index;  // tree the edge is removed from
    std::size_t other_index;
    Edge removed;
};

struct ExchangeResult {
    bool ok = false;
    std::optional<ExchangeCounterexample> counterexample;
};

/// Checks the matroid basis exchange property on a family of trees over one
/// vertex set: for every pair (B1, B2) and edge e of B1 \ B2 there must be an
/// edge f of B2 \ B1 with (B1 \ {e}) + {f} in the family.
ExchangeResult verify_matroid_exchange(std::span<const LabeledTree> trees);

}  // namespace cm2
