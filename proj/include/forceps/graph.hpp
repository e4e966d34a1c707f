#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "forceps/vertex_set.hpp"

namespace forceps {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is one VertexSet per vertex. Construction validates symmetry,
/// absence of loops, and that every neighbor lies in [0, n).
class Graph {
public:
    Graph() = default;
    /// Builds a graph from an edge list. Duplicate edges are merged; loops and
    /// out-of-range endpoints throw std::invalid_argument.
    Graph(int n, const std::vector<Edge>& edges);
    /// Builds a graph from neighborhoods, validating every invariant.
    static Graph from_adjacency(std::vector<VertexSet> adj);

    int order() const { return static_cast<int>(adj_.size()); }
    VertexSet vertices() const { return VertexSet::range(order()); }
    VertexSet neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return adj_[v].size(); }
    bool has_edge(Vertex u, Vertex v) const { return adj_[u].contains(v); }
    int edge_count() const;
    int max_degree() const;
    int min_degree() const;
    /// Edges (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;
    /// Vertices whose degree is at most `bound`.
    VertexSet vertices_with_degree_at_most(int bound) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<VertexSet> adj_;
};

/// A graph6 decoding failure at a given byte offset.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset)
    {
    }
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Largest order representable by the short graph6 header.
inline constexpr int graph6_max_order = 62;

/// Decodes a short-form graph6 string (n <= 62). Trailing '\n' / '\r' are ignored.
Graph from_graph6(std::string_view text);
/// Encodes to canonical short-form graph6.
std::string to_graph6(const Graph& g);

/// Vertex (a, b) is numbered a * |V(h)| + b.
Graph cartesian_product(const Graph& g, const Graph& h);
/// Vertices of h are shifted by |V(g)|.
Graph disjoint_union(const Graph& g, const Graph& h);
/// Throws std::invalid_argument if the edge is absent.
Graph delete_edge(const Graph& g, Edge e);

/// The subgraph induced by `keep`, relabeled 0..|keep|-1 in ascending order.
/// `original` (if given) receives new-to-old vertex labels.
Graph induced_subgraph(const Graph& g, VertexSet keep, std::vector<Vertex>* original = nullptr);

/// Components of G[within], ordered by minimum vertex.
std::vector<VertexSet> components_within(const Graph& g, VertexSet within);
/// The component of G[within] containing v (v must lie in `within`).
VertexSet component_of(const Graph& g, VertexSet within, Vertex v);

inline std::vector<VertexSet> connected_components(const Graph& g)
{
    return components_within(g, g.vertices());
}
bool is_connected(const Graph& g);

} // namespace forceps
