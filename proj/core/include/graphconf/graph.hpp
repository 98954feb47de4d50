#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "graphconf/errors.hpp"

namespace graphconf {

using VertexId = std::string;
using EdgeId = std::string;

/// Oriented edge. The orientation (tail -> head) is input data and is
/// never recomputed; every sign downstream derives from it.
struct Edge {
    EdgeId id;
    VertexId tail;
    VertexId head;
};

/// Finite simple graph with oriented edges: a one-dimensional simplicial
/// complex. No self-loops, no parallel edges. Vertices and edges are kept
/// sorted by identifier so every enumeration downstream is reproducible.
class Graph {
 public:
    Graph(std::vector<VertexId> vertices, std::vector<Edge> edges);

    const std::vector<VertexId>& vertex_ids() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_vertex(const VertexId& v) const { return vertex_index_.count(v) != 0; }
    bool has_edge(const EdgeId& e) const { return edge_index_.count(e) != 0; }
    std::size_t vertex_index(const VertexId& v) const;
    std::size_t edge_index(const EdgeId& e) const;
    const Edge& edge(const EdgeId& e) const { return edges_[edge_index(e)]; }

    /// mu(v): number of edges incident to v.
    std::size_t valence(const VertexId& v) const;

    /// Incident edge ids in identifier order.
    const std::vector<EdgeId>& incident_edges(const VertexId& v) const;

    bool incident(const EdgeId& e, const VertexId& v) const;
    /// Closed edges share a point iff they share an endpoint (or coincide).
    bool edges_meet(const EdgeId& e, const EdgeId& f) const;

    bool connected() const;
    std::size_t component_count() const;
    long long euler_characteristic() const {
        return static_cast<long long>(vertex_count()) - static_cast<long long>(edge_count());
    }
    long long first_betti() const;

 private:
    std::vector<VertexId> vertices_;
    std::vector<Edge> edges_;
    std::unordered_map<VertexId, std::size_t> vertex_index_;
    std::unordered_map<EdgeId, std::size_t> edge_index_;
    std::vector<std::vector<EdgeId>> incident_;  // by vertex index, sorted by edge id
};

struct GraphClassification {
    bool connected = false;
    bool circle_like = false;    // homeomorphic to S^1
    bool interval_like = false;  // homeomorphic to [0,1] (or a single point)
    std::vector<VertexId> essential_vertices;  // valence >= 3
    long long first_betti = 0;
    long long euler = 0;
};

/// Classify the graph against the standing hypotheses used throughout:
/// connectivity, circle/interval exclusion, essential vertices.
GraphClassification validate(const Graph& g);

/// Sparse integer 1-chain; absent edge ids have coefficient zero.
using EdgeChain = std::map<EdgeId, mpz_class>;

/// Signed vertex incidence of the chain (head +, tail -), per vertex.
std::map<VertexId, mpz_class> chain_boundary(const Graph& g, const EdgeChain& c);

/// A chain is a cycle iff its signed incidence vanishes at every vertex.
bool is_cycle(const Graph& g, const EdgeChain& c);

/// Replace each edge e by a path of parts.at(e) edges through fresh
/// valence-2 vertices, preserving orientation head-to-tail. Edges missing
/// from the map are left alone. New cells are named "<edge>.<k>" (edges)
/// and "<edge>.v<k>" (vertices); a count of 1 keeps the original edge id.
Graph subdivide(const Graph& g, const std::map<EdgeId, unsigned>& parts);

/// Fundamental cycles of the non-tree edges of a breadth-first spanning
/// tree rooted at the lexicographically smallest vertex. Each chain has
/// coefficient +1 on its non-tree edge and +-1 on tree edges; together
/// they form a Z-basis of the cycle space.
std::vector<EdgeChain> fundamental_cycle_basis(const Graph& g);

/// Same, rooted at a chosen vertex.
std::vector<EdgeChain> fundamental_cycle_basis(const Graph& g, const VertexId& root);

}  // namespace graphconf
