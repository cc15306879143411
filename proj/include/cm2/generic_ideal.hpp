#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cm2/monomial.hpp"
#include "cm2/trees_graphs.hpp"

namespace cm2 {

/// The fresh variables x_{i,j} attached to a tree: one per oriented edge,
/// named "x<i>_<j>" and ordered by (i, j). The double index keeps names
/// injective once vertex numbers reach two digits.
struct GenericVariables {
    VarSet vars;
    std::map<std::pair<int, int>, std::size_t> index;  // (from, to) -> variable index

    Monomial var(int from, int to) const;
};

GenericVariables generic_variables(const LabeledTree& tree);

/// m x (m+1) matrix over the generic variables: the row of the k-th edge
/// {i, j} (i < j) carries -x_{i,j} in column i and x_{j,i} in column j.
class GenericMatrix {
public:
    struct Row {
        Edge edge;
        Monomial neg_entry;  // column edge.lo
        Monomial pos_entry;  // column edge.hi
    };

    GenericMatrix(LabeledTree tree, GenericVariables vars, std::vector<Row> rows)
        : tree_(std::move(tree)), vars_(std::move(vars)), rows_(std::move(rows)) {}

    const LabeledTree& tree() const { return tree_; }
    const GenericVariables& variables() const { return vars_; }
    std::span<const Row> rows() const { return rows_; }
    std::size_t columns() const { return static_cast<std::size_t>(tree_.vertex_count()); }

private:
    LabeledTree tree_;
    GenericVariables vars_;
    std::vector<Row> rows_;
};

GenericMatrix generic_matrix(const LabeledTree& tree);

/// Sign-normalized maximal minor of generic_matrix(tree) obtained by
/// omitting `column`, computed by the closed-form product: the factor for
/// vertex i is x_{i, b(i, column)} with b the first step on the path.
Monomial minor_product(const LabeledTree& tree, int column);

/// The generators v_1..v_{m+1} of the generic monomial ideal of the tree, in
/// column order. Their overall gcd is the unit.
std::vector<Monomial> generic_ideal(const LabeledTree& tree);

/// Height-2 prime component generated by two distinct variables; `first` and
/// `second` are stored in canonical monomial order.
struct PrimeComponent {
    Monomial first;
    Monomial second;

    PrimeComponent(Monomial a, Monomial b);
    bool operator==(const PrimeComponent& o) const { return first == o.first && second == o.second; }
    bool operator<(const PrimeComponent& o) const {
        return first < o.first || (first == o.first && second < o.second);
    }
};

/// The components (x_{i,b(i,j)}, x_{j,e(i,j)}) over all pairs i < j,
/// deduplicated and canonically sorted. Their intersection is the generic
/// ideal of the tree.
std::vector<PrimeComponent> primary_decomposition_generic(const LabeledTree& tree);

struct LabelConditionResult {
    bool ok;
    std::optional<std::pair<int, int>> violating_pair;  // first failing i < j
};

/// Checks coprimality of the labels pulled toward each other along every
/// vertex pair: gcd(label_from(i, b(i,j)), label_from(j, e(i,j))) must be the
/// unit for all i < j. This is exactly the condition under which the labeled
/// tree produces a Cohen-Macaulay ideal of codimension 2.
LabelConditionResult verify_label_condition(const LabeledTree& tree);

/// Generators of the Cohen-Macaulay ideal of a labeled tree: generator j is
/// the product over i != j of label_from(i, b(i,j)). Requires the label
/// condition; the result always has unit gcd.
std::vector<Monomial> build_cm_ideal(const LabeledTree& tree);

}  // namespace cm2
