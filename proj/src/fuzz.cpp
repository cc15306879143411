#include "cm2/fuzz.hpp"

#include <algorithm>

#include "cm2/generic_ideal.hpp"
#include "cm2/oracle.hpp"

namespace cm2::fuzz {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Monomial random_monomial(Rng& rng, const VarSet& vars, std::span<const std::size_t> pool,
                         int max_degree) {
    int degree = uniform(rng, 1, max_degree);
    Monomial::Exponents exps;
    for (int d = 0; d < degree; ++d)
        exps.emplace_back(pool[uniform(rng, 0, static_cast<int>(pool.size()) - 1)], 1);
    return Monomial(vars, std::move(exps));
}

}  // namespace

LabeledTree random_tree(Rng& rng, int n) {
    if (n < 2)
        throw UsageError("random tree needs at least 2 vertices");
    std::vector<int> seq(std::max(0, n - 2));
    for (int& s : seq)
        s = uniform(rng, 1, n);
    return oracle::tree_from_pruefer(n, seq);
}

LabeledTree random_labeled_cm_tree(Rng& rng, int n) {
    LabeledTree tree = random_tree(rng, n);
    const int strategy = uniform(rng, 0, 9);

    if (strategy < 7) {
        // disjoint per-vertex pools keep every compared label pair coprime;
        // pools shrink to one variable when two per vertex would not fit in
        // eight variables. A coin makes some vertices always contribute the
        // same single variable, which produces the degenerate ideals with
        // many relation trees.
        const int width = n <= 4 ? 2 : 1;
        VarSet vars = standard_variables(width * n);
        std::vector<char> degenerate(n + 1, 0);
        for (int v = 1; v <= n; ++v)
            degenerate[v] = uniform(rng, 0, 2) == 0;

        std::vector<EdgeLabels> labels;
        for (const Edge& e : tree.edges()) {
            auto draw = [&](int v) {
                std::vector<std::size_t> pool;
                for (int k = 0; k < width; ++k)
                    pool.push_back(static_cast<std::size_t>(width * (v - 1) + k));
                if (degenerate[v])
                    return Monomial::var(vars, pool[0]);
                return random_monomial(rng, vars, pool, 3);
            };
            labels.push_back({draw(e.lo), draw(e.hi)});
        }
        LabeledTree labeled(n, {tree.edges().begin(), tree.edges().end()}, std::move(labels));
        if (!verify_label_condition(labeled).ok)
            throw std::logic_error("pooled labels must satisfy the coprimality condition");
        return labeled;
    }

    // free labels over few variables, resampled until the condition holds
    VarSet vars = standard_variables(8);
    std::vector<std::size_t> pool(vars->size());
    for (std::size_t k = 0; k < pool.size(); ++k)
        pool[k] = k;
    for (int attempt = 0; attempt < 300; ++attempt) {
        std::vector<EdgeLabels> labels;
        for (std::size_t k = 0; k < tree.edges().size(); ++k)
            labels.push_back(
                {random_monomial(rng, vars, pool, 2), random_monomial(rng, vars, pool, 2)});
        LabeledTree labeled(n, {tree.edges().begin(), tree.edges().end()}, std::move(labels));
        if (verify_label_condition(labeled).ok)
            return labeled;
    }
    return random_labeled_cm_tree(rng, n);  // fall back to a fresh draw
}

SimpleGraph random_admissible_graph(Rng& rng, int max_vertices) {
    if (max_vertices < 2)
        throw UsageError("need room for at least 2 vertices");
    std::vector<std::vector<int>> cliques;
    int used = std::min(max_vertices, uniform(rng, 2, std::min(5, max_vertices)));
    cliques.push_back({});
    for (int v = 1; v <= used; ++v)
        cliques.back().push_back(v);

    while (used < max_vertices && uniform(rng, 0, 9) < 7) {
        int size = uniform(rng, 2, std::min(5, max_vertices - used + 1));
        int attach = uniform(rng, 1, used);
        std::vector<int> clique{attach};
        for (int t = 1; t < size; ++t)
            clique.push_back(++used);
        cliques.push_back(std::move(clique));
    }

    std::vector<Edge> edges;
    for (const auto& c : cliques)
        for (std::size_t a = 0; a < c.size(); ++a)
            for (std::size_t b = a + 1; b < c.size(); ++b)
                edges.emplace_back(c[a], c[b]);
    return SimpleGraph(used, std::move(edges));
}

}  // namespace cm2::fuzz
