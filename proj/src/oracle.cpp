#include "cm2/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <unordered_set>

namespace cm2::oracle {

SignedMonomialMatrix::SignedMonomialMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), cells_(rows, std::vector<std::optional<SignedEntry>>(cols)) {
    if (rows == 0 || cols == 0)
        throw UsageError("matrix dimensions must be positive");
}

void SignedMonomialMatrix::set(std::size_t r, std::size_t c, int sign, Monomial m) {
    if (r >= rows_ || c >= cols_)
        throw UsageError("matrix index out of range");
    if (sign != 1 && sign != -1)
        throw UsageError("sign must be +1 or -1");
    cells_[r][c] = SignedEntry{sign, std::move(m)};
}

const std::optional<SignedEntry>& SignedMonomialMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
        throw UsageError("matrix index out of range");
    return cells_[r][c];
}

SignedMonomialMatrix SignedMonomialMatrix::omit_column(std::size_t c) const {
    if (c >= cols_)
        throw UsageError("column out of range");
    SignedMonomialMatrix out(rows_, cols_ - 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::size_t oc = 0;
        for (std::size_t k = 0; k < cols_; ++k) {
            if (k == c)
                continue;
            if (cells_[r][k])
                out.cells_[r][oc] = cells_[r][k];
            ++oc;
        }
    }
    return out;
}

namespace {

using Poly = std::map<Monomial, long long>;  // formal integer combination

void add_term(Poly& p, const Monomial& m, long long coeff) {
    auto [it, inserted] = p.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            p.erase(it);
    }
}

Poly det_rec(const SignedMonomialMatrix& m, std::size_t row, std::vector<std::size_t>& cols) {
    Poly out;
    if (row == m.rows()) {
        // empty product; pick the variable set from any entry via the caller
        throw std::logic_error("det_rec base case must be handled by the caller");
    }
    for (std::size_t idx = 0; idx < cols.size(); ++idx) {
        const auto& entry = m.at(row, cols[idx]);
        if (!entry)
            continue;
        int sign = (idx % 2 == 0 ? 1 : -1) * entry->sign;
        if (row + 1 == m.rows()) {
            add_term(out, entry->mono, sign);
            continue;
        }
        std::vector<std::size_t> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t k = 0; k < cols.size(); ++k)
            if (k != idx)
                rest.push_back(cols[k]);
        for (const auto& [mono, coeff] : det_rec(m, row + 1, rest))
            add_term(out, entry->mono * mono, sign * coeff);
    }
    return out;
}

}  // namespace

std::optional<SignedEntry> det_cofactor(const SignedMonomialMatrix& m) {
    if (m.rows() != m.cols())
        throw UsageError("determinant needs a square matrix");
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::size_t nonzero = 0;
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.at(r, c))
                ++nonzero;
        if (nonzero > 2)
            throw UsageError("more than two nonzero entries in a row");
    }

    std::vector<std::size_t> cols(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        cols[c] = c;
    Poly p = det_rec(m, 0, cols);
    if (p.empty())
        return std::nullopt;
    if (p.size() > 1 || (p.begin()->second != 1 && p.begin()->second != -1))
        throw std::logic_error("determinant did not collapse to a signed monomial");
    return SignedEntry{p.begin()->second > 0 ? 1 : -1, p.begin()->first};
}

SignedMonomialMatrix generic_sign_matrix(const LabeledTree& tree, const VarSet& vars) {
    const std::size_t m = tree.edges().size();
    SignedMonomialMatrix out(m, tree.vertex_count());
    for (std::size_t k = 0; k < m; ++k) {
        const Edge& e = tree.edges()[k];
        auto lo_hi = vars->index_of("x" + std::to_string(e.lo) + "_" + std::to_string(e.hi));
        auto hi_lo = vars->index_of("x" + std::to_string(e.hi) + "_" + std::to_string(e.lo));
        if (!lo_hi || !hi_lo)
            throw UsageError("variable set is missing a generic edge variable");
        out.set(k, e.lo - 1, -1, Monomial::var(vars, *lo_hi));
        out.set(k, e.hi - 1, +1, Monomial::var(vars, *hi_lo));
    }
    return out;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    if (gens.empty())
        throw UsageError("empty generator list");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (std::size_t a = 0; a < gens.size(); ++a) {
        bool redundant = false;
        for (std::size_t b = 0; b < gens.size() && !redundant; ++b)
            if (a != b && divides(gens[b], gens[a]))
                redundant = true;
        if (!redundant)
            out.push_back(gens[a]);
    }
    return out;
}

std::vector<Monomial> intersect_ideals(std::span<const std::vector<Monomial>> ideals) {
    if (ideals.empty())
        throw UsageError("empty ideal list");
    std::vector<Monomial> current = minimalize(ideals[0]);
    for (std::size_t k = 1; k < ideals.size(); ++k) {
        std::vector<Monomial> next;
        next.reserve(current.size() * ideals[k].size());
        for (const Monomial& a : current)
            for (const Monomial& b : ideals[k])
                next.push_back(lcm(a, b));
        current = minimalize(std::move(next));
    }
    return current;
}

bool ideals_equal(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
    return minimalize(a) == minimalize(b);
}

namespace {

struct ResidualEntry {
    int col;
    int sign;
    Monomial mono;
};

std::string residual_key(const std::vector<ResidualEntry>& state) {
    std::string key;
    for (const ResidualEntry& e : state) {
        key += std::to_string(e.col);
        key += e.sign > 0 ? '+' : '-';
        key += format(e.mono);
        key += ';';
    }
    return key;
}

/// state - (t_sign, t_mono) * relation; nullopt when the difference is not a
/// vector of single signed monomial entries.
std::optional<std::vector<ResidualEntry>> subtract_multiple(const std::vector<ResidualEntry>& state,
                                                            const TaylorRelation& rel, int t_sign,
                                                            const Monomial& t_mono) {
    const std::pair<int, std::pair<int, const Monomial*>> rel_entries[2] = {
        {rel.i, {-1, &rel.col_i}},
        {rel.j, {+1, &rel.col_j}},
    };

    std::vector<ResidualEntry> out;
    std::size_t s = 0;
    auto push_state_until = [&](int col) {
        while (s < state.size() && state[s].col < col)
            out.push_back(state[s++]);
    };
    for (const auto& [col, signed_mono] : rel_entries) {
        push_state_until(col);
        int term_sign = -t_sign * signed_mono.first;
        Monomial term = t_mono * *signed_mono.second;
        if (s < state.size() && state[s].col == col) {
            const ResidualEntry& existing = state[s++];
            if (!(existing.mono == term))
                return std::nullopt;  // binomial entry, not representable
            if (existing.sign == term_sign)
                return std::nullopt;  // coefficient 2
            // cancels
        } else {
            out.push_back({col, term_sign, term});
        }
    }
    while (s < state.size())
        out.push_back(state[s++]);
    return out;
}

}  // namespace

SpanVerdict relation_in_span(const TaylorRelation& target, std::span<const TaylorRelation> basis,
                             std::size_t state_limit) {
    std::vector<ResidualEntry> start{{target.i, -1, target.col_i}, {target.j, +1, target.col_j}};

    std::unordered_set<std::string> visited;
    std::deque<std::vector<ResidualEntry>> queue;
    visited.insert(residual_key(start));
    queue.push_back(std::move(start));

    while (!queue.empty()) {
        std::vector<ResidualEntry> state = std::move(queue.front());
        queue.pop_front();

        const ResidualEntry& lead = state.front();
        for (const TaylorRelation& rel : basis) {
            int rel_sign;
            const Monomial* rel_mono;
            if (rel.i == lead.col) {
                rel_sign = -1;
                rel_mono = &rel.col_i;
            } else if (rel.j == lead.col) {
                rel_sign = +1;
                rel_mono = &rel.col_j;
            } else {
                continue;
            }
            if (!divides(*rel_mono, lead.mono))
                continue;
            int t_sign = lead.sign * rel_sign;
            Monomial t_mono = divide_exact(lead.mono, *rel_mono);
            auto next = subtract_multiple(state, rel, t_sign, t_mono);
            if (!next)
                continue;
            if (next->empty())
                return SpanVerdict::InSpan;
            std::string key = residual_key(*next);
            if (visited.contains(key))
                continue;
            if (visited.size() >= state_limit)
                return SpanVerdict::Indeterminate;
            visited.insert(std::move(key));
            queue.push_back(std::move(*next));
        }
    }
    return SpanVerdict::NotInSpan;
}

LabeledTree tree_from_pruefer(int n, std::span<const int> sequence) {
    if (n < 2)
        throw UsageError("a tree needs at least 2 vertices");
    if (sequence.size() != static_cast<std::size_t>(n) - 2)
        throw UsageError("Pruefer sequence must have length n-2");
    std::vector<int> degree(n + 1, 1);
    for (int s : sequence) {
        if (s < 1 || s > n)
            throw UsageError("Pruefer sequence value out of range");
        ++degree[s];
    }
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (int s : sequence) {
        int leaf = 0;
        for (int v = 1; v <= n; ++v)
            if (degree[v] == 1) {
                leaf = v;
                break;
            }
        edges.emplace_back(leaf, s);
        degree[leaf] = 0;
        --degree[s];
    }
    int a = 0, b = 0;
    for (int v = 1; v <= n; ++v)
        if (degree[v] == 1)
            (a == 0 ? a : b) = v;
    edges.emplace_back(a, b);
    return LabeledTree(n, std::move(edges));
}

void for_each_labeled_tree(int n, const std::function<bool(const LabeledTree&)>& visit) {
    if (n < 2 || n > 9)
        throw UsageError("labeled tree enumeration supports 2 <= n <= 9");
    std::vector<int> seq(n - 2, 1);
    while (true) {
        if (!visit(tree_from_pruefer(n, seq)))
            return;
        // next sequence in lexicographic order
        int pos = static_cast<int>(seq.size()) - 1;
        while (pos >= 0 && seq[pos] == n)
            seq[pos--] = 1;
        if (pos < 0)
            return;
        ++seq[pos];
    }
}

std::vector<LabeledTree> all_labeled_trees(int n) {
    std::vector<LabeledTree> out;
    for_each_labeled_tree(n, [&](const LabeledTree& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

}  // namespace cm2::oracle
