#include "lidcol/graph.hpp"

#include <algorithm>
#include <set>

namespace lidcol {

Graph Graph::from_edge_list(int n, std::span<const Edge> edges)
{
    if (n < 0)
        throw InputError("vertex count must be non-negative");
    Graph g;
    g.adjacency_.resize(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") has an endpoint outside 0.." + std::to_string(n - 1));
        if (u == v)
            throw InputError("self-loop at vertex " + std::to_string(u));
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    std::size_t degree_sum = 0;
    for (auto &adj : g.adjacency_) {
        std::ranges::sort(adj);
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
        degree_sum += adj.size();
        g.max_degree_ = std::max(g.max_degree_, static_cast<int>(adj.size()));
    }
    g.m_ = static_cast<int>(degree_sum / 2);
    return g;
}

void Graph::check_vertex(Vertex v) const
{
    if (v < 0 || v >= n())
        throw InputError("vertex " + std::to_string(v) + " out of range 0.." +
                         std::to_string(n() - 1));
}

std::span<const Vertex> Graph::neighbours(Vertex v) const
{
    check_vertex(v);
    return adjacency_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    auto adj = neighbours(u);
    check_vertex(v);
    return std::ranges::binary_search(adj, v);
}

std::vector<Vertex> Graph::closed_neighbourhood(Vertex v) const
{
    auto adj = neighbours(v);
    std::vector<Vertex> out(adj.begin(), adj.end());
    out.insert(std::ranges::upper_bound(out, v), v);
    return out;
}

std::vector<Vertex> Graph::distance_two_set(Vertex v) const
{
    std::vector<Vertex> out;
    for (Vertex w : neighbours(v))
        for (Vertex u : adjacency_[w])
            if (u != v && !std::ranges::binary_search(adjacency_[v], u))
                out.push_back(u);
    std::ranges::sort(out);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool Graph::closed_twins(Vertex u, Vertex v) const
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw InputError("closed_twins needs two distinct vertices");
    if (!adjacent(u, v))
        return false;
    return closed_neighbourhood(u) == closed_neighbourhood(v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 0; u < n(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

bool Graph::is_regular() const
{
    return std::ranges::all_of(adjacency_, [&](const auto &adj) {
        return static_cast<int>(adj.size()) == max_degree_;
    });
}

Graph induced_subgraph(const Graph &g, std::span<const Vertex> vertices)
{
    std::vector<int> index(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        g.check_vertex(vertices[i]);
        index[vertices[i]] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (Vertex w : g.neighbours(vertices[i]))
            if (index[w] > static_cast<int>(i))
                edges.emplace_back(static_cast<int>(i), index[w]);
    return Graph::from_edge_list(static_cast<int>(vertices.size()), edges);
}

std::vector<Vertex> EliminationOrder::elimination_sequence() const
{
    if (kind == OrderKind::degeneracy)
        return order;
    return {order.rbegin(), order.rend()};
}

std::vector<Vertex> smallest_last_order(const Graph &g, std::span<const char> active, int *width)
{
    std::vector<int> degree(static_cast<std::size_t>(g.n()), 0);
    std::set<std::pair<int, Vertex>> queue;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (!active[v])
            continue;
        for (Vertex w : g.neighbours(v))
            degree[v] += active[w] ? 1 : 0;
        queue.emplace(degree[v], v);
    }
    std::vector<char> removed(static_cast<std::size_t>(g.n()), 0);
    std::vector<Vertex> order;
    order.reserve(queue.size());
    int max_seen = 0;
    while (!queue.empty()) {
        auto [deg, v] = *queue.begin();
        queue.erase(queue.begin());
        removed[v] = 1;
        order.push_back(v);
        max_seen = std::max(max_seen, deg);
        for (Vertex w : g.neighbours(v)) {
            if (!active[w] || removed[w])
                continue;
            queue.erase({degree[w], w});
            queue.emplace(--degree[w], w);
        }
    }
    if (width)
        *width = max_seen;
    return order;
}

EliminationOrder degeneracy_ordering(const Graph &g)
{
    if (g.n() < 1)
        throw InputError("degeneracy ordering needs at least one vertex");
    std::vector<char> all(static_cast<std::size_t>(g.n()), 1);
    EliminationOrder eo;
    eo.kind = OrderKind::degeneracy;
    eo.order = smallest_last_order(g, all, &eo.width);
    return eo;
}

bool is_perfect_elimination_sequence(const Graph &g, std::span<const Vertex> sequence)
{
    if (static_cast<int>(sequence.size()) != g.n())
        return false;
    std::vector<int> position(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        if (sequence[i] < 0 || sequence[i] >= g.n() || position[sequence[i]] != -1)
            return false;
        position[sequence[i]] = static_cast<int>(i);
    }
    // Standard check: for each v, let p be its earliest later neighbour; the
    // other later neighbours of v must all be adjacent to p.
    for (Vertex v : sequence) {
        Vertex parent = -1;
        for (Vertex w : g.neighbours(v))
            if (position[w] > position[v] && (parent < 0 || position[w] < position[parent]))
                parent = w;
        if (parent < 0)
            continue;
        for (Vertex w : g.neighbours(v))
            if (position[w] > position[v] && w != parent && !g.adjacent(parent, w))
                return false;
    }
    return true;
}

std::optional<EliminationOrder> chordal_peo(const Graph &g)
{
    if (g.n() < 1)
        throw InputError("chordal_peo needs at least one vertex");
    const int n = g.n();
    // Buckets by label, each ordered by id so ties go to the smallest id.
    std::vector<int> label(static_cast<std::size_t>(n), 0);
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    std::vector<std::set<Vertex>> buckets(static_cast<std::size_t>(n) + 1);
    for (Vertex v = 0; v < n; ++v)
        buckets[0].insert(v);
    int top = 0;

    EliminationOrder eo;
    eo.kind = OrderKind::chordal_peo;
    eo.order.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        while (buckets[top].empty())
            --top;
        Vertex v = *buckets[top].begin();
        buckets[top].erase(buckets[top].begin());
        visited[v] = 1;
        eo.order.push_back(v);
        for (Vertex w : g.neighbours(v)) {
            if (visited[w])
                continue;
            buckets[label[w]].erase(w);
            buckets[++label[w]].insert(w);
            top = std::max(top, label[w]);
        }
    }

    auto sequence = eo.elimination_sequence();
    if (!is_perfect_elimination_sequence(g, sequence))
        return std::nullopt;

    std::vector<int> position(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        position[sequence[i]] = i;
    for (Vertex v = 0; v < n; ++v) {
        int later = 0;
        for (Vertex w : g.neighbours(v))
            later += position[w] > position[v] ? 1 : 0;
        eo.width = std::max(eo.width, later);
    }
    return eo;
}

int clique_number_chordal(const Graph &g, const EliminationOrder &peo)
{
    if (peo.kind != OrderKind::chordal_peo)
        throw InputError("clique_number_chordal needs a chordal elimination order");
    auto sequence = peo.elimination_sequence();
    if (!is_perfect_elimination_sequence(g, sequence))
        throw InputError("order is not a perfect elimination ordering of this graph");
    if (g.n() == 0)
        return 0;
    std::vector<int> position(static_cast<std::size_t>(g.n()));
    for (int i = 0; i < g.n(); ++i)
        position[sequence[i]] = i;
    int best = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
        int later = 0;
        for (Vertex w : g.neighbours(v))
            later += position[w] > position[v] ? 1 : 0;
        best = std::max(best, later);
    }
    return best + 1;
}

std::vector<std::vector<Vertex>> connected_components(const Graph &g)
{
    std::vector<std::vector<Vertex>> out;
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    for (Vertex root = 0; root < g.n(); ++root) {
        if (seen[root])
            continue;
        std::vector<Vertex> component{root};
        seen[root] = 1;
        for (std::size_t head = 0; head < component.size(); ++head)
            for (Vertex w : g.neighbours(component[head]))
                if (!seen[w]) {
                    seen[w] = 1;
                    component.push_back(w);
                }
        std::ranges::sort(component);
        out.push_back(std::move(component));
    }
    return out;
}

} // namespace lidcol
