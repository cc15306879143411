#include "cm2/generic_ideal.hpp"

#include <algorithm>
#include <string>

namespace cm2 {

Monomial GenericVariables::var(int from, int to) const {
    auto it = index.find({from, to});
    if (it == index.end())
        throw UsageError("no generic variable for that oriented edge");
    return Monomial::var(vars, it->second);
}

GenericVariables generic_variables(const LabeledTree& tree) {
    std::vector<std::pair<int, int>> oriented;
    oriented.reserve(2 * tree.edges().size());
    for (const Edge& e : tree.edges()) {
        oriented.emplace_back(e.lo, e.hi);
        oriented.emplace_back(e.hi, e.lo);
    }
    std::sort(oriented.begin(), oriented.end());

    GenericVariables out;
    std::vector<std::string> names;
    names.reserve(oriented.size());
    for (std::size_t k = 0; k < oriented.size(); ++k) {
        names.push_back("x" + std::to_string(oriented[k].first) + "_" +
                        std::to_string(oriented[k].second));
        out.index.emplace(oriented[k], k);
    }
    out.vars = make_variables(std::move(names));
    return out;
}

GenericMatrix generic_matrix(const LabeledTree& tree) {
    GenericVariables vars = generic_variables(tree);
    std::vector<GenericMatrix::Row> rows;
    rows.reserve(tree.edges().size());
    for (const Edge& e : tree.edges())
        rows.push_back({e, vars.var(e.lo, e.hi), vars.var(e.hi, e.lo)});
    return GenericMatrix(tree, std::move(vars), std::move(rows));
}

namespace {

Monomial minor_product_with(const LabeledTree& tree, const GenericVariables& vars, int column) {
    std::vector<int> parent = tree.parents_toward(column);
    Monomial::Exponents exps;
    for (int i = 1; i <= tree.vertex_count(); ++i) {
        if (i == column)
            continue;
        auto it = vars.index.find({i, parent[i]});
        if (it == vars.index.end())
            throw std::logic_error("missing generic variable");
        exps.emplace_back(it->second, 1);
    }
    return Monomial(vars.vars, std::move(exps));
}

}  // namespace

Monomial minor_product(const LabeledTree& tree, int column) {
    if (column < 1 || column > tree.vertex_count())
        throw UsageError("column out of range");
    return minor_product_with(tree, generic_variables(tree), column);
}

std::vector<Monomial> generic_ideal(const LabeledTree& tree) {
    GenericVariables vars = generic_variables(tree);
    std::vector<Monomial> gens;
    gens.reserve(tree.vertex_count());
    for (int j = 1; j <= tree.vertex_count(); ++j)
        gens.push_back(minor_product_with(tree, vars, j));

    Monomial g = gens.front();
    for (const Monomial& v : gens)
        g = gcd(g, v);
    if (!g.is_one())
        throw std::logic_error("generic ideal generators must have unit gcd");
    return gens;
}

PrimeComponent::PrimeComponent(Monomial a, Monomial b) : first(std::move(a)), second(std::move(b)) {
    if (!is_coprime(first, second))
        throw UsageError("prime component generators must be coprime");
    if (second < first)
        std::swap(first, second);
}

std::vector<PrimeComponent> primary_decomposition_generic(const LabeledTree& tree) {
    GenericVariables vars = generic_variables(tree);
    const int n = tree.vertex_count();
    std::vector<std::vector<int>> parent(n + 1);
    for (int r = 1; r <= n; ++r)
        parent[r] = tree.parents_toward(r);

    std::vector<PrimeComponent> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            int b = parent[j][i];  // first step from i toward j
            int e = parent[i][j];  // first step from j toward i
            out.emplace_back(vars.var(i, b), vars.var(j, e));
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

LabelConditionResult verify_label_condition(const LabeledTree& tree) {
    if (!tree.labeled())
        throw UsageError("label condition needs a labeled tree");
    const int n = tree.vertex_count();
    std::vector<std::vector<int>> parent(n + 1);
    for (int r = 1; r <= n; ++r)
        parent[r] = tree.parents_toward(r);

    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            int b = parent[j][i];
            int e = parent[i][j];
            if (!is_coprime(tree.label_from(i, b), tree.label_from(j, e)))
                return {false, std::make_pair(i, j)};
        }
    return {true, std::nullopt};
}

std::vector<Monomial> build_cm_ideal(const LabeledTree& tree) {
    LabelConditionResult cond = verify_label_condition(tree);
    if (!cond.ok)
        throw DomainError("label coprimality condition fails for generator pair (" +
                          std::to_string(cond.violating_pair->first) + ", " +
                          std::to_string(cond.violating_pair->second) + ")");

    const int n = tree.vertex_count();
    std::vector<Monomial> gens;
    gens.reserve(n);
    for (int j = 1; j <= n; ++j) {
        std::vector<int> parent = tree.parents_toward(j);
        Monomial v = Monomial::one(tree.labels(0).from_lo.variables());
        for (int i = 1; i <= n; ++i)
            if (i != j)
                v = v * tree.label_from(i, parent[i]);
        gens.push_back(std::move(v));
    }

    Monomial g = gens.front();
    for (const Monomial& v : gens)
        g = gcd(g, v);
    if (!g.is_one())
        throw std::logic_error("labeled-tree ideal must have unit gcd");
    return gens;
}

}  // namespace cm2
