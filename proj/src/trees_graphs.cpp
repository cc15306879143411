#include "cm2/trees_graphs.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <queue>

namespace cm2 {

namespace {

struct Dsu {
    std::vector<int> parent;

    explicit Dsu(int n) : parent(n + 1) {
        for (int i = 0; i <= n; ++i)
            parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a), b = find(b);
        if (a == b)
            return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

Edge::Edge(int u, int v) {
    if (u < 1 || v < 1)
        throw UsageError("vertices are 1-based");
    if (u == v)
        throw UsageError("loop edges are not allowed");
    lo = std::min(u, v);
    hi = std::max(u, v);
}

LabeledTree::LabeledTree(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 2)
        throw UsageError("a tree needs at least 2 vertices");
    if (edges_.size() != static_cast<std::size_t>(vertex_count_) - 1)
        throw UsageError("a tree on n vertices has exactly n-1 edges");
    Dsu dsu(vertex_count_);
    adjacency_.assign(vertex_count_ + 1, {});
    for (const Edge& e : edges_) {
        if (e.hi > vertex_count_)
            throw UsageError("edge endpoint out of range");
        if (!dsu.unite(e.lo, e.hi))
            throw UsageError("edge list contains a cycle or a duplicate edge");
        adjacency_[e.lo].push_back(e.hi);
        adjacency_[e.hi].push_back(e.lo);
    }
    // n-1 acyclic edges on n vertices: connected, no further check needed
}

LabeledTree::LabeledTree(int vertex_count, std::vector<Edge> edges, std::vector<EdgeLabels> labels)
    : LabeledTree(vertex_count, std::move(edges)) {
    if (labels.size() != edges_.size())
        throw UsageError("labels must be given for every edge");
    for (const EdgeLabels& l : labels) {
        if (l.from_lo.is_one() || l.from_hi.is_one())
            throw UsageError("edge labels must not be the unit monomial");
        if (!same_variables(l.from_lo.variables(), labels.front().from_lo.variables()) ||
            !same_variables(l.from_hi.variables(), labels.front().from_lo.variables()))
            throw UsageError("all edge labels must share one variable set");
    }
    labels_ = std::move(labels);
}

const EdgeLabels& LabeledTree::labels(std::size_t edge_index) const {
    if (!labeled())
        throw UsageError("tree has no edge labels");
    if (edge_index >= labels_.size())
        throw UsageError("edge index out of range");
    return labels_[edge_index];
}

void LabeledTree::check_vertex(int v) const {
    if (v < 1 || v > vertex_count_)
        throw UsageError("vertex out of range");
}

bool LabeledTree::has_edge(int u, int v) const {
    if (u == v)
        return false;
    Edge e(u, v);
    return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

const Monomial& LabeledTree::label_from(int v, int w) const {
    if (!labeled())
        throw UsageError("tree has no edge labels");
    Edge e(v, w);
    for (std::size_t k = 0; k < edges_.size(); ++k)
        if (edges_[k] == e)
            return v == e.lo ? labels_[k].from_lo : labels_[k].from_hi;
    throw UsageError("no such edge");
}

std::vector<int> LabeledTree::parents_toward(int root) const {
    check_vertex(root);
    std::vector<int> parent(vertex_count_ + 1, 0);
    std::vector<char> seen(vertex_count_ + 1, 0);
    std::queue<int> q;
    q.push(root);
    seen[root] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adjacency_[v])
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = v;
                q.push(w);
            }
    }
    return parent;
}

std::vector<int> LabeledTree::path(int i, int j) const {
    check_vertex(i);
    check_vertex(j);
    if (i == j)
        throw PreconditionError("path endpoints must be distinct");
    std::vector<int> parent = parents_toward(j);
    std::vector<int> out;
    for (int c = i; c != j; c = parent[c])
        out.push_back(c);
    out.push_back(j);
    return out;
}

std::pair<int, int> LabeledTree::path_endpoints(int i, int j) const {
    std::vector<int> p = path(i, j);
    return {p[1], p[p.size() - 2]};
}

std::vector<std::pair<int, Edge>> LabeledTree::free_vertex_ordering() const {
    std::vector<int> deg(vertex_count_ + 1, 0);
    std::vector<char> alive(vertex_count_ + 1, 1);
    for (int v = 1; v <= vertex_count_; ++v)
        deg[v] = static_cast<int>(adjacency_[v].size());

    std::vector<std::pair<int, Edge>> out;
    out.reserve(edges_.size());
    for (std::size_t step = 0; step < edges_.size(); ++step) {
        int v = 0;
        for (int c = 1; c <= vertex_count_; ++c)
            if (alive[c] && deg[c] == 1) {
                v = c;
                break;
            }
        int w = 0;
        for (int c : adjacency_[v])
            if (alive[c]) {
                w = c;
                break;
            }
        out.emplace_back(v, Edge(v, w));
        alive[v] = 0;
        deg[v] = 0;
        --deg[w];
    }
    return out;
}

std::vector<Edge> LabeledTree::sorted_edges() const {
    std::vector<Edge> out = edges_;
    std::sort(out.begin(), out.end());
    return out;
}

bool LabeledTree::same_edge_set(const LabeledTree& other) const {
    return vertex_count_ == other.vertex_count_ && sorted_edges() == other.sorted_edges();
}

std::string edge_set_key(std::span<const Edge> edges) {
    std::vector<Edge> sorted(edges.begin(), edges.end());
    std::sort(sorted.begin(), sorted.end());
    std::string key;
    key.reserve(sorted.size() * 2);
    for (const Edge& e : sorted) {
        key.push_back(static_cast<char>(e.lo));
        key.push_back(static_cast<char>(e.hi));
    }
    return key;
}

SimpleGraph::SimpleGraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 1)
        throw UsageError("a graph needs at least one vertex");
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        if (edges_[k].hi > vertex_count_)
            throw UsageError("edge endpoint out of range");
        if (k > 0 && edges_[k] == edges_[k - 1])
            throw UsageError("duplicate edge");
    }
    adjacency_.assign(vertex_count_ + 1, {});
    for (const Edge& e : edges_) {
        adjacency_[e.lo].push_back(e.hi);
        adjacency_[e.hi].push_back(e.lo);
    }
    for (auto& a : adjacency_)
        std::sort(a.begin(), a.end());
}

SimpleGraph SimpleGraph::complete(int n) {
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            edges.emplace_back(i, j);
    return SimpleGraph(n, std::move(edges));
}

bool SimpleGraph::has_edge(int u, int v) const {
    if (u == v || u < 1 || v < 1 || u > vertex_count_ || v > vertex_count_)
        return false;
    return std::binary_search(edges_.begin(), edges_.end(), Edge(u, v));
}

std::span<const int> SimpleGraph::neighbors(int v) const {
    if (v < 1 || v > vertex_count_)
        throw UsageError("vertex out of range");
    return adjacency_[v];
}

bool SimpleGraph::connected() const {
    std::vector<char> seen(vertex_count_ + 1, 0);
    std::queue<int> q;
    q.push(1);
    seen[1] = 1;
    int count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adjacency_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                q.push(w);
            }
    }
    return count == vertex_count_;
}

SimpleGraph relabel_graph(const SimpleGraph& g, std::span<const int> relabel) {
    const int n = g.vertex_count();
    if (relabel.size() < static_cast<std::size_t>(n) + 1)
        throw UsageError("relabeling is too short");
    std::vector<char> hit(n + 1, 0);
    for (int v = 1; v <= n; ++v) {
        int w = relabel[v];
        if (w < 1 || w > n || hit[w])
            throw UsageError("relabeling is not a permutation");
        hit[w] = 1;
    }
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const Edge& e : g.edges())
        edges.emplace_back(relabel[e.lo], relabel[e.hi]);
    return SimpleGraph(n, std::move(edges));
}

void for_each_spanning_tree(const SimpleGraph& g,
                            const std::function<bool(std::span<const Edge>)>& visit) {
    const int n = g.vertex_count();
    if (n < 2)
        throw DomainError("spanning tree enumeration needs at least 2 vertices");
    if (!g.connected())
        throw DomainError("graph is not connected");

    const std::span<const Edge> edges = g.edges();
    const std::size_t m = edges.size();
    std::vector<Edge> chosen;
    chosen.reserve(n - 1);
    bool stop = false;

    auto spannable = [&](const Dsu& dsu, std::size_t k) {
        Dsu copy = dsu;
        for (std::size_t t = k; t < m; ++t)
            copy.unite(edges[t].lo, edges[t].hi);
        int root = copy.find(1);
        for (int v = 2; v <= n; ++v)
            if (copy.find(v) != root)
                return false;
        return true;
    };

    // include-first backtracking: emits edge sets in lexicographic order
    std::function<void(std::size_t, Dsu&)> rec = [&](std::size_t k, Dsu& dsu) {
        if (stop)
            return;
        if (chosen.size() == static_cast<std::size_t>(n) - 1) {
            if (!visit(chosen))
                stop = true;
            return;
        }
        if (k == m || !spannable(dsu, k))
            return;
        const Edge& e = edges[k];
        if (dsu.find(e.lo) != dsu.find(e.hi)) {
            Dsu next = dsu;
            next.unite(e.lo, e.hi);
            chosen.push_back(e);
            rec(k + 1, next);
            chosen.pop_back();
            if (stop)
                return;
        }
        rec(k + 1, dsu);
    };

    Dsu dsu(n);
    rec(0, dsu);
}

std::vector<LabeledTree> spanning_trees(const SimpleGraph& g) {
    std::vector<LabeledTree> out;
    for_each_spanning_tree(g, [&](std::span<const Edge> edges) {
        out.emplace_back(g.vertex_count(), std::vector<Edge>(edges.begin(), edges.end()));
        return true;
    });
    if (g.vertex_count() <= 12) {
        long long expected = kirchhoff_spanning_tree_count(g);
        if (expected != static_cast<long long>(out.size()))
            throw std::logic_error("spanning tree count disagrees with the matrix-tree determinant");
    }
    return out;
}

long long kirchhoff_spanning_tree_count(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (n > 16)
        throw UsageError("matrix-tree count supports at most 16 vertices");
    if (n == 1)
        return 1;
    if (!g.connected())
        return 0;

    using Wide = __int128;
    const int d = n - 1;  // principal minor of the Laplacian
    std::vector<std::vector<Wide>> a(d, std::vector<Wide>(d, 0));
    for (int v = 1; v <= d; ++v)
        a[v - 1][v - 1] = static_cast<Wide>(g.neighbors(v).size());
    for (const Edge& e : g.edges())
        if (e.hi <= d) {
            a[e.lo - 1][e.hi - 1] -= 1;
            a[e.hi - 1][e.lo - 1] -= 1;
        }

    // fraction-free (Bareiss) elimination, exact over the integers
    Wide prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < d; ++k) {
        if (a[k][k] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < d; ++r)
                if (a[r][k] != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0)
                return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < d; ++i)
            for (int j = k + 1; j < d; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    Wide det = a[d - 1][d - 1] * sign;
    if (det < 0 || det > static_cast<Wide>(LLONG_MAX))
        throw std::logic_error("matrix-tree determinant out of range");
    return static_cast<long long>(det);
}

std::optional<std::vector<int>> is_chordal(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> weight(n + 1, 0), position(n + 1, 0), by_position(n + 1, 0);

    // maximum cardinality search, smallest vertex wins ties
    for (int t = n; t >= 1; --t) {
        int best = 0;
        for (int v = 1; v <= n; ++v)
            if (!position[v] && (best == 0 || weight[v] > weight[best]))
                best = v;
        position[best] = t;
        by_position[t] = best;
        for (int w : g.neighbors(best))
            if (!position[w])
                ++weight[w];
    }

    for (int t = 1; t <= n; ++t) {
        int v = by_position[t];
        int parent = 0, parent_pos = INT_MAX;
        for (int w : g.neighbors(v))
            if (position[w] > t && position[w] < parent_pos) {
                parent = w;
                parent_pos = position[w];
            }
        if (!parent)
            continue;
        for (int w : g.neighbors(v))
            if (position[w] > t && w != parent && !g.has_edge(parent, w))
                return std::nullopt;
    }

    std::vector<int> peo(n);
    for (int t = 1; t <= n; ++t)
        peo[t - 1] = by_position[t];
    return peo;
}

namespace {

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
    // both sorted ascending
    std::size_t j = 0;
    for (int x : a) {
        while (j < b.size() && b[j] < x)
            ++j;
        if (j == b.size() || b[j] != x)
            return false;
    }
    return true;
}

void bron_kerbosch(const std::vector<std::uint32_t>& adj, std::uint32_t r, std::uint32_t p,
                   std::uint32_t x, std::vector<std::uint32_t>& out) {
    if (!p && !x) {
        out.push_back(r);
        return;
    }
    std::uint32_t px = p | x;
    int pivot = -1, best = -1;
    for (int v = 0; v < 32; ++v)
        if (px >> v & 1u) {
            int cnt = std::popcount(p & adj[v]);
            if (cnt > best) {
                best = cnt;
                pivot = v;
            }
        }
    std::uint32_t candidates = p & ~adj[pivot];
    for (int v = 0; v < 32; ++v)
        if (candidates >> v & 1u) {
            std::uint32_t bit = 1u << v;
            bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
            p &= ~bit;
            x |= bit;
        }
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> cliques;

    if (auto peo = is_chordal(g)) {
        std::vector<int> position(n + 1, 0);
        for (int t = 0; t < n; ++t)
            position[(*peo)[t]] = t;
        for (int v = 1; v <= n; ++v) {
            std::vector<int> c{v};
            for (int w : g.neighbors(v))
                if (position[w] > position[v])
                    c.push_back(w);
            std::sort(c.begin(), c.end());
            cliques.push_back(std::move(c));
        }
        // keep the inclusion-maximal candidates only
        std::vector<std::vector<int>> kept;
        std::sort(cliques.begin(), cliques.end(),
                  [](const auto& a, const auto& b) { return a.size() > b.size(); });
        for (auto& c : cliques) {
            bool covered = false;
            for (const auto& k : kept)
                if (is_subset(c, k)) {
                    covered = true;
                    break;
                }
            if (!covered)
                kept.push_back(std::move(c));
        }
        cliques = std::move(kept);
    } else {
        if (n > 30)
            throw UsageError("clique enumeration supports at most 30 vertices");
        std::vector<std::uint32_t> adj(n, 0);
        for (const Edge& e : g.edges()) {
            adj[e.lo - 1] |= 1u << (e.hi - 1);
            adj[e.hi - 1] |= 1u << (e.lo - 1);
        }
        std::vector<std::uint32_t> masks;
        bron_kerbosch(adj, 0, (n == 32 ? ~0u : (1u << n) - 1u), 0, masks);
        for (std::uint32_t m : masks) {
            std::vector<int> c;
            for (int v = 0; v < n; ++v)
                if (m >> v & 1u)
                    c.push_back(v + 1);
            cliques.push_back(std::move(c));
        }
    }

    std::sort(cliques.begin(), cliques.end());
    return cliques;
}

bool clique_intersection_condition(const SimpleGraph& g) {
    auto cliques = maximal_cliques(g);
    for (std::size_t a = 0; a < cliques.size(); ++a)
        for (std::size_t b = a + 1; b < cliques.size(); ++b) {
            std::size_t i = 0, j = 0, common = 0;
            while (i < cliques[a].size() && j < cliques[b].size()) {
                if (cliques[a][i] < cliques[b][j])
                    ++i;
                else if (cliques[b][j] < cliques[a][i])
                    ++j;
                else {
                    ++common;
                    ++i, ++j;
                }
            }
            if (common > 1)
                return false;
        }
    return true;
}

QuasiForestOrder quasi_forest_order(const SimpleGraph& g) {
    if (!g.connected())
        throw DomainError("graph is not connected");
    if (!is_chordal(g))
        throw DomainError("graph is not chordal");
    if (!clique_intersection_condition(g))
        throw DomainError("two maximal cliques share more than one vertex");

    const int n = g.vertex_count();
    auto cliques = maximal_cliques(g);  // lexicographically sorted
    const std::size_t r = cliques.size();

    QuasiForestOrder out;
    std::vector<char> used(r, 0), in_union(n + 1, 0);

    // greedy leaf order: always the lexicographically smallest clique that
    // touches the part of the graph already covered
    out.order.cliques.push_back(cliques[0]);
    used[0] = 1;
    for (int v : cliques[0])
        in_union[v] = 1;

    for (std::size_t step = 1; step < r; ++step) {
        std::size_t pick = r;
        for (std::size_t c = 0; c < r && pick == r; ++c) {
            if (used[c])
                continue;
            for (int v : cliques[c])
                if (in_union[v]) {
                    pick = c;
                    break;
                }
        }
        if (pick == r)
            throw std::logic_error("connected graph has a clique order");

        int attach = 0;
        int attach_count = 0;
        for (int v : cliques[pick])
            if (in_union[v]) {
                attach = v;
                ++attach_count;
            }
        if (attach_count != 1)
            throw std::logic_error("clique meets the earlier union in more than one vertex");

        out.order.cliques.push_back(cliques[pick]);
        out.order.attach_vertices.push_back(attach);
        used[pick] = 1;
        for (int v : cliques[pick])
            in_union[v] = 1;
    }

    out.relabel.assign(n + 1, 0);
    int next = 1;
    for (int v : out.order.cliques[0])
        out.relabel[v] = next++;
    for (std::size_t i = 1; i < r; ++i)
        for (int v : out.order.cliques[i])
            if (v != out.order.attach_vertices[i - 1])
                out.relabel[v] = next++;
    return out;
}

}  // namespace cm2
