#pragma once

#include <random>

#include "cm2/trees_graphs.hpp"

namespace cm2::fuzz {

using Rng = std::mt19937_64;

/// Uniform random labeled tree on [n] (random Pruefer sequence).
LabeledTree random_tree(Rng& rng, int n);

/// Random labeled tree whose labels satisfy the coprimality condition, so
/// the resulting ideal is always Cohen-Macaulay of codimension 2. Most draws
/// use disjoint per-vertex variable pools (the condition then holds by
/// construction, including degenerate ideals where every label of a vertex
/// is the same variable); a fraction draws free random labels and keeps
/// resampling until the condition holds.
LabeledTree random_labeled_cm_tree(Rng& rng, int n);

/// Random connected chordal graph whose maximal cliques pairwise share at
/// most one vertex: a quasi-tree of cliques attached at single vertices.
SimpleGraph random_admissible_graph(Rng& rng, int max_vertices);

}  // namespace cm2::fuzz
