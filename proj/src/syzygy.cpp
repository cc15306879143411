#include "cm2/syzygy.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_set>

namespace cm2 {

namespace {

constexpr int kMaxEnumerationGenerators = 9;  // 9^7 candidate trees is the practical ceiling

int pair_index(int n, int i, int j) {
    // pairs (i, j), i < j, in lexicographic order
    return (i - 1) * n - i * (i - 1) / 2 + (j - i - 1);
}

struct PairTable {
    int n = 0;
    std::vector<Monomial> lcms;               // by pair_index
    std::vector<std::uint64_t> allowed;       // bit q of allowed[p]: edge-pair q may lie on p's path

    const Monomial& lcm_of(int i, int j) const { return lcms[pair_index(n, i, j)]; }
};

PairTable build_pair_table(const MonomialIdeal& ideal, bool with_masks) {
    PairTable t;
    t.n = static_cast<int>(ideal.generator_count());
    t.lcms.reserve(t.n * (t.n - 1) / 2);
    for (int i = 1; i <= t.n; ++i)
        for (int j = i + 1; j <= t.n; ++j)
            t.lcms.push_back(lcm(ideal.generator(i), ideal.generator(j)));
    if (with_masks) {
        const std::size_t pairs = t.lcms.size();
        if (pairs > 64)
            throw UsageError("relation-tree enumeration supports at most 11 generators");
        t.allowed.assign(pairs, 0);
        for (std::size_t p = 0; p < pairs; ++p)
            for (std::size_t q = 0; q < pairs; ++q)
                if (divides(t.lcms[q], t.lcms[p]))
                    t.allowed[p] |= std::uint64_t{1} << q;
    }
    return t;
}

/// Reusable adjacency + rooted-parent scratch for testing many candidate
/// edge sets without allocating.
struct TreeScratch {
    int n;
    std::vector<std::vector<int>> adj;
    std::vector<int> parent;
    std::vector<char> seen;
    std::vector<int> stack;

    explicit TreeScratch(int vertices) : n(vertices), adj(vertices + 1), parent(vertices + 1), seen(vertices + 1) {
        for (auto& a : adj)
            a.reserve(vertices);
        stack.reserve(vertices);
    }

    void load(std::span<const Edge> edges) {
        for (auto& a : adj)
            a.clear();
        for (const Edge& e : edges) {
            adj[e.lo].push_back(e.hi);
            adj[e.hi].push_back(e.lo);
        }
    }

    void parents_toward(int root) {
        std::fill(seen.begin(), seen.end(), 0);
        stack.clear();
        stack.push_back(root);
        seen[root] = 1;
        parent[root] = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    parent[w] = v;
                    stack.push_back(w);
                }
        }
    }
};

// mask-based variant used inside the candidate enumeration
bool generates_fast(const PairTable& t, TreeScratch& s, std::span<const Edge> edges) {
    s.load(edges);
    for (int j = 2; j <= t.n; ++j) {
        s.parents_toward(j);
        for (int i = 1; i < j; ++i) {
            std::uint64_t mask = t.allowed[pair_index(t.n, i, j)];
            for (int c = i; c != j;) {
                int p = s.parent[c];
                int q = pair_index(t.n, std::min(c, p), std::max(c, p));
                if (!(mask >> q & 1))
                    return false;
                c = p;
            }
        }
    }
    return true;
}

std::vector<Monomial> product_formula_minors(const LabeledTree& labeled) {
    const int n = labeled.vertex_count();
    std::vector<Monomial> out;
    out.reserve(n);
    for (int j = 1; j <= n; ++j) {
        std::vector<int> parent = labeled.parents_toward(j);
        Monomial v = Monomial::one(labeled.labels(0).from_lo.variables());
        for (int i = 1; i <= n; ++i)
            if (i != j)
                v = v * labeled.label_from(i, parent[i]);
        out.push_back(std::move(v));
    }
    return out;
}

bool minors_match(const MonomialIdeal& ideal, const LabeledTree& labeled) {
    std::vector<Monomial> minors = product_formula_minors(labeled);
    for (int j = 1; j <= static_cast<int>(minors.size()); ++j)
        if (!(minors[j - 1] == ideal.generator(j)))
            return false;
    return true;
}

void run_parallel(int jobs, std::size_t count, const std::function<void(std::size_t, std::size_t)>& body) {
    std::size_t workers = std::max(1, jobs);
    workers = std::min(workers, count);
    if (workers <= 1) {
        body(0, count);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t t = 0; t < workers; ++t) {
        std::size_t begin = t * chunk;
        std::size_t end = std::min(count, begin + chunk);
        if (begin >= end)
            break;
        pool.emplace_back([&, begin, end] {
            try {
                body(begin, end);
            } catch (...) {
                std::scoped_lock lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        });
    }
    for (auto& th : pool)
        th.join();
    if (error)
        std::rethrow_exception(error);
}

}  // namespace

MonomialIdeal::MonomialIdeal(VarSet vars, std::vector<Monomial> gens) : vars_(std::move(vars)) {
    if (!vars_)
        throw UsageError("ideal requires a variable set");
    if (gens.empty())
        throw UsageError("ideal needs at least one generator");
    for (const Monomial& g : gens)
        if (!same_variables(g.variables(), vars_))
            throw UsageError("generator over a different variable set");

    // reduce to the unique minimal monomial generators, keeping input order
    for (std::size_t a = 0; a < gens.size(); ++a) {
        bool redundant = false;
        for (std::size_t b = 0; b < gens.size() && !redundant; ++b) {
            if (a == b)
                continue;
            if (divides(gens[b], gens[a]) && (!(gens[b] == gens[a]) || b < a))
                redundant = true;
        }
        if (!redundant)
            gens_.push_back(gens[a]);
    }
    for (const Monomial& g : gens_)
        if (g.is_one())
            throw DomainError("the ideal is the whole ring (unit generator)");
}

const Monomial& MonomialIdeal::generator(int index_1based) const {
    if (index_1based < 1 || static_cast<std::size_t>(index_1based) > gens_.size())
        throw UsageError("generator index out of range");
    return gens_[index_1based - 1];
}

TaylorRelation taylor_relation(const MonomialIdeal& ideal, int i, int j) {
    if (i < 1 || j <= i || static_cast<std::size_t>(j) > ideal.generator_count())
        throw UsageError("relation indices must satisfy 1 <= i < j <= m+1");
    const Monomial& ui = ideal.generator(i);
    const Monomial& uj = ideal.generator(j);
    Monomial g = gcd(ui, uj);
    return {i, j, divide_exact(uj, g), divide_exact(ui, g), lcm(ui, uj)};
}

std::vector<TaylorRelation> taylor_relations(const MonomialIdeal& ideal) {
    const int n = static_cast<int>(ideal.generator_count());
    if (n < 2)
        throw DomainError("Taylor relations need at least two generators");
    std::vector<TaylorRelation> out;
    out.reserve(n * (n - 1) / 2);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            out.push_back(taylor_relation(ideal, i, j));
    return out;
}

bool tree_generates(const MonomialIdeal& ideal, const LabeledTree& tree) {
    const int n = static_cast<int>(ideal.generator_count());
    if (tree.vertex_count() != n)
        throw UsageError("tree vertex count must match the generator count");
    PairTable table = build_pair_table(ideal, /*with_masks=*/false);
    TreeScratch scratch(n);
    scratch.load(tree.edges());
    for (int j = 2; j <= n; ++j) {
        scratch.parents_toward(j);
        for (int i = 1; i < j; ++i) {
            const Monomial& target = table.lcm_of(i, j);
            for (int c = i; c != j;) {
                int p = scratch.parent[c];
                if (!divides(table.lcm_of(std::min(c, p), std::max(c, p)), target))
                    return false;
                c = p;
            }
        }
    }
    return true;
}

LabeledTree attach_taylor_labels(const MonomialIdeal& ideal, const LabeledTree& tree) {
    std::vector<EdgeLabels> labels;
    labels.reserve(tree.edges().size());
    for (const Edge& e : tree.edges()) {
        Monomial g = gcd(ideal.generator(e.lo), ideal.generator(e.hi));
        labels.push_back({divide_exact(ideal.generator(e.hi), g),
                          divide_exact(ideal.generator(e.lo), g)});
    }
    return LabeledTree(tree.vertex_count(),
                       std::vector<Edge>(tree.edges().begin(), tree.edges().end()),
                       std::move(labels));
}

std::vector<LabeledTree> relation_trees(const MonomialIdeal& ideal, int jobs) {
    CmVerdict verdict = is_cm_codim2(ideal);
    if (!verdict.accepted)
        throw DomainError("ideal is not Cohen-Macaulay of codimension 2 (" +
                          to_string(*verdict.reason) + ")");

    const int n = static_cast<int>(ideal.generator_count());
    PairTable table = build_pair_table(ideal, /*with_masks=*/true);
    SimpleGraph complete = SimpleGraph::complete(n);
    std::vector<LabeledTree> out;

    if (jobs <= 1) {
        TreeScratch scratch(n);
        for_each_spanning_tree(complete, [&](std::span<const Edge> edges) {
            if (generates_fast(table, scratch, edges))
                out.push_back(attach_taylor_labels(
                    ideal, LabeledTree(n, std::vector<Edge>(edges.begin(), edges.end()))));
            return true;
        });
    } else {
        std::vector<std::vector<Edge>> candidates;
        for_each_spanning_tree(complete, [&](std::span<const Edge> edges) {
            candidates.emplace_back(edges.begin(), edges.end());
            return true;
        });
        std::vector<char> keep(candidates.size(), 0);
        run_parallel(jobs, candidates.size(), [&](std::size_t begin, std::size_t end) {
            TreeScratch scratch(n);
            for (std::size_t k = begin; k < end; ++k)
                keep[k] = generates_fast(table, scratch, candidates[k]);
        });
        for (std::size_t k = 0; k < candidates.size(); ++k)
            if (keep[k])
                out.push_back(attach_taylor_labels(ideal, LabeledTree(n, std::move(candidates[k]))));
    }
    return out;
}

HilbertBurchMatrix::HilbertBurchMatrix(MonomialIdeal ideal, LabeledTree tree,
                                       std::vector<TaylorRelation> rows)
    : ideal_(std::move(ideal)), tree_(std::move(tree)), rows_(std::move(rows)) {
    if (rows_.size() != tree_.edges().size())
        throw UsageError("one row per tree edge required");
    for (std::size_t k = 0; k < rows_.size(); ++k)
        if (Edge(rows_[k].i, rows_[k].j) != tree_.edges()[k])
            throw UsageError("row order must follow tree edge order");
    if (!minors_match(ideal_, tree_))
        throw DomainError("maximal minors do not reproduce the generators");
}

std::vector<std::string> HilbertBurchMatrix::row_text(std::size_t row) const {
    if (row >= rows_.size())
        throw UsageError("row out of range");
    std::vector<std::string> out(ideal_.generator_count(), "0");
    out[rows_[row].i - 1] = "-" + format(rows_[row].col_i);
    out[rows_[row].j - 1] = format(rows_[row].col_j);
    return out;
}

HilbertBurchMatrix hilbert_burch_matrix(const MonomialIdeal& ideal, const LabeledTree& tree) {
    if (!tree_generates(ideal, tree))
        throw DomainError("tree does not generate the syzygy module");
    LabeledTree labeled = attach_taylor_labels(ideal, tree);
    std::vector<TaylorRelation> rows;
    rows.reserve(tree.edges().size());
    for (const Edge& e : tree.edges())
        rows.push_back(taylor_relation(ideal, e.lo, e.hi));
    return HilbertBurchMatrix(ideal, std::move(labeled), std::move(rows));
}

std::string to_string(CmRejectReason reason) {
    switch (reason) {
        case CmRejectReason::NonunitGcd: return "nonunit gcd";
        case CmRejectReason::NoGeneratingTree: return "no generating tree";
        case CmRejectReason::MinorsMismatch: return "minors mismatch";
    }
    return "unknown";
}

CmVerdict is_cm_codim2(const MonomialIdeal& ideal) {
    Monomial overall = ideal.generators()[0];
    for (const Monomial& g : ideal.generators())
        overall = gcd(overall, g);
    if (!overall.is_one())
        return {false, std::nullopt, CmRejectReason::NonunitGcd};

    const int n = static_cast<int>(ideal.generator_count());
    if (n > kMaxEnumerationGenerators)
        throw UsageError("relation-tree search supports at most 9 generators");

    PairTable table = build_pair_table(ideal, /*with_masks=*/true);
    TreeScratch scratch(n);
    std::optional<std::vector<Edge>> first;
    for_each_spanning_tree(SimpleGraph::complete(n), [&](std::span<const Edge> edges) {
        if (generates_fast(table, scratch, edges)) {
            first.emplace(edges.begin(), edges.end());
            return false;
        }
        return true;
    });
    if (!first)
        return {false, std::nullopt, CmRejectReason::NoGeneratingTree};

    LabeledTree witness = attach_taylor_labels(ideal, LabeledTree(n, std::move(*first)));
    if (!minors_match(ideal, witness))
        return {false, std::nullopt, CmRejectReason::MinorsMismatch};
    return {true, std::move(witness), std::nullopt};
}

SimpleGraph taylor_graph(const MonomialIdeal& ideal, int jobs) {
    std::vector<LabeledTree> trees = relation_trees(ideal, jobs);
    std::set<Edge> edges;
    for (const LabeledTree& t : trees)
        edges.insert(t.edges().begin(), t.edges().end());
    return SimpleGraph(static_cast<int>(ideal.generator_count()),
                       std::vector<Edge>(edges.begin(), edges.end()));
}

bool has_linear_resolution(const MonomialIdeal& ideal, int jobs) {
    std::vector<LabeledTree> trees = relation_trees(ideal, jobs);

    const std::int64_t d = ideal.generators()[0].degree();
    for (const Monomial& g : ideal.generators())
        if (g.degree() != d)
            return false;

    for (const LabeledTree& t : trees) {
        bool linear = true;
        for (const Edge& e : t.edges())
            if (lcm(ideal.generator(e.lo), ideal.generator(e.hi)).degree() != d + 1) {
                linear = false;
                break;
            }
        if (linear)
            return true;
    }
    return false;
}

SpanningComparison spanning_equals_relation(const MonomialIdeal& ideal, int jobs) {
    std::vector<LabeledTree> relation = relation_trees(ideal, jobs);

    std::set<Edge> union_edges;
    for (const LabeledTree& t : relation)
        union_edges.insert(t.edges().begin(), t.edges().end());
    SimpleGraph graph(static_cast<int>(ideal.generator_count()),
                      std::vector<Edge>(union_edges.begin(), union_edges.end()));

    std::unordered_set<std::string> relation_keys;
    for (const LabeledTree& t : relation)
        relation_keys.insert(edge_set_key(t.sorted_edges()));

    SpanningComparison out;
    out.relation_tree_count = relation.size();
    for (LabeledTree& t : spanning_trees(graph)) {
        ++out.spanning_tree_count;
        if (!relation_keys.contains(edge_set_key(t.sorted_edges())))
            out.spanning_only.push_back(std::move(t));
    }
    out.equal = out.spanning_only.empty() && out.relation_tree_count == out.spanning_tree_count;
    return out;
}

ExchangeResult verify_matroid_exchange(std::span<const LabeledTree> trees) {
    if (trees.empty())
        return {true, std::nullopt};
    const int n = trees.front().vertex_count();
    for (const LabeledTree& t : trees)
        if (t.vertex_count() != n)
            throw UsageError("trees must share one vertex set");

    std::unordered_set<std::string> keys;
    std::vector<std::vector<Edge>> family;   // deduplicated, sorted edge lists
    std::vector<std::size_t> source_index;
    for (std::size_t k = 0; k < trees.size(); ++k) {
        std::vector<Edge> sorted = trees[k].sorted_edges();
        if (keys.insert(edge_set_key(sorted)).second) {
            family.push_back(std::move(sorted));
            source_index.push_back(k);
        }
    }

    for (std::size_t a = 0; a < family.size(); ++a)
        for (std::size_t b = 0; b < family.size(); ++b) {
            if (a == b)
                continue;
            std::vector<Edge> only_a, only_b;
            std::set_difference(family[a].begin(), family[a].end(), family[b].begin(),
                                family[b].end(), std::back_inserter(only_a));
            std::set_difference(family[b].begin(), family[b].end(), family[a].begin(),
                                family[a].end(), std::back_inserter(only_b));
            for (const Edge& e : only_a) {
                bool found = false;
                for (const Edge& f : only_b) {
                    std::vector<Edge> candidate;
                    candidate.reserve(family[a].size());
                    for (const Edge& x : family[a])
                        if (x != e)
                            candidate.push_back(x);
                    candidate.push_back(f);
                    std::sort(candidate.begin(), candidate.end());
                    if (keys.contains(edge_set_key(candidate))) {
                        found = true;
                        break;
                    }
                }
                if (!found)
                    return {false, ExchangeCounterexample{source_index[a], source_index[b], e}};
            }
        }
    return {true, std::nullopt};
}

}  // namespace cm2
