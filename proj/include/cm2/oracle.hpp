#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "cm2/monomial.hpp"
#include "cm2/syzygy.hpp"
#include "cm2/trees_graphs.hpp"

/// Deliberately slow, maximally simple reference implementations used by the
/// test suite (and a hidden CLI debugging flag). Nothing here calls the
/// routines it is meant to check; the duplicated arithmetic is the point.
namespace cm2::oracle {

struct SignedEntry {
    int sign;  // +1 or -1
    Monomial mono;
};

/// Matrix whose cells are zero or a signed monomial.
class SignedMonomialMatrix {
public:
    SignedMonomialMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    void set(std::size_t r, std::size_t c, int sign, Monomial m);
    const std::optional<SignedEntry>& at(std::size_t r, std::size_t c) const;

    SignedMonomialMatrix omit_column(std::size_t c) const;

private:
    std::size_t rows_, cols_;
    std::vector<std::vector<std::optional<SignedEntry>>> cells_;
};

/// Laplace expansion along the first row, recursively. Requires a square
/// matrix with at most two nonzero entries per row, which forces the result
/// to collapse to a single signed monomial or to zero (nullopt).
std::optional<SignedEntry> det_cofactor(const SignedMonomialMatrix& m);

/// The generic matrix of a tree rebuilt from first principles: the row of
/// edge {i, j} (i < j) has -x<i>_<j> in column i-1 and x<j>_<i> in column
/// j-1, with variables looked up by name in `vars`.
SignedMonomialMatrix generic_sign_matrix(const LabeledTree& tree, const VarSet& vars);

/// Distinct minimal generators of the ideal, canonically sorted.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// Intersection of monomial ideals via the pairwise lcm rule, folded over
/// the list and minimalized after every step.
std::vector<Monomial> intersect_ideals(std::span<const std::vector<Monomial>> ideals);

bool ideals_equal(const std::vector<Monomial>& a, const std::vector<Monomial>& b);

enum class SpanVerdict { InSpan, NotInSpan, Indeterminate };

/// Decides by breadth-first rewriting whether `target` is a combination of
/// the basis relations with signed monomial coefficients. The residual keeps
/// at most two signed monomial entries; every applicable cancellation of the
/// leading entry is explored. A visited-state bound keeps the search finite;
/// exceeding it yields Indeterminate, which callers must not treat as a pass.
SpanVerdict relation_in_span(const TaylorRelation& target,
                             std::span<const TaylorRelation> basis,
                             std::size_t state_limit = 100000);

/// Decodes a Pruefer sequence (length n-2, values in 1..n) into a tree.
LabeledTree tree_from_pruefer(int n, std::span<const int> sequence);

/// Streams all n^(n-2) labeled trees on [n] in Pruefer-sequence order.
/// Requires 2 <= n <= 9. Return false from the callback to stop.
void for_each_labeled_tree(int n, const std::function<bool(const LabeledTree&)>& visit);

std::vector<LabeledTree> all_labeled_trees(int n);

}  // namespace cm2::oracle
