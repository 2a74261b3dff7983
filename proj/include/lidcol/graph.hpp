#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lidcol {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Malformed arguments: out-of-range ids, self-loops, domain violations.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called on a state its contract does not cover
/// (e.g. a recolouring lemma on a colouring that is not lid).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Simple undirected graph on vertices 0..n-1. Adjacency lists are sorted
/// and symmetric. Immutable once built.
class Graph {
public:
    Graph() = default;

    /// Duplicate pairs collapse to one edge; (u,v) and (v,u) are the same.
    static Graph from_edge_list(int n, std::span<const Edge> edges);

    int n() const { return static_cast<int>(adjacency_.size()); }
    int m() const { return m_; }
    int max_degree() const { return max_degree_; }

    std::span<const Vertex> neighbours(Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(neighbours(v).size()); }
    bool adjacent(Vertex u, Vertex v) const;

    /// N[v], sorted.
    std::vector<Vertex> closed_neighbourhood(Vertex v) const;
    /// Vertices at distance exactly two from v, sorted.
    std::vector<Vertex> distance_two_set(Vertex v) const;
    /// N[u] == N[v]. Only adjacent vertices can be closed twins.
    bool closed_twins(Vertex u, Vertex v) const;

    /// All edges as (u,v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    bool is_regular() const;

    void check_vertex(Vertex v) const;

    friend bool operator==(const Graph &, const Graph &) = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    int m_ = 0;
    int max_degree_ = 0;
};

/// Subgraph induced by `vertices` (sorted ascending). Vertex i of the
/// result corresponds to vertices[i].
Graph induced_subgraph(const Graph &g, std::span<const Vertex> vertices);

enum class OrderKind { degeneracy, chordal_peo };

/// Vertex permutation driving the inductive constructions.
///
/// degeneracy: `order` is the smallest-last removal order; each vertex has at
/// most `width` neighbours later in the order.
/// chordal_peo: `order` is the maximum cardinality search visiting order; its
/// reverse is a perfect elimination ordering and `width` is the largest
/// number of later neighbours in that reverse order (omega - 1).
struct EliminationOrder {
    std::vector<Vertex> order;
    int width = 0;
    OrderKind kind = OrderKind::degeneracy;

    /// For chordal_peo: the reversed order, in which every vertex's later
    /// neighbours form a clique. For degeneracy: `order` itself.
    std::vector<Vertex> elimination_sequence() const;
};

/// Smallest-last order restricted to the vertices with active[v] != 0.
/// Repeatedly removes an active vertex of minimum remaining degree, smallest
/// id first. Returns the removal order; `width` receives the largest degree
/// seen at removal time.
std::vector<Vertex> smallest_last_order(const Graph &g, std::span<const char> active,
                                        int *width = nullptr);

EliminationOrder degeneracy_ordering(const Graph &g);

/// Maximum cardinality search (ties to the smallest id), then the perfect
/// elimination check. Returns nullopt when the graph is not chordal.
std::optional<EliminationOrder> chordal_peo(const Graph &g);

/// True when every vertex's later neighbours in `sequence` form a clique.
bool is_perfect_elimination_sequence(const Graph &g, std::span<const Vertex> sequence);

int clique_number_chordal(const Graph &g, const EliminationOrder &peo);

/// Components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph &g);

} // namespace lidcol
