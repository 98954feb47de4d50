#include "graphconf/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace graphconf {

Graph::Graph(std::vector<VertexId> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    if (vertices_.empty()) throw MalformedGraph("graph must have at least one vertex");

    std::sort(vertices_.begin(), vertices_.end());
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
        if (vertices_[i] == vertices_[i + 1])
            throw MalformedGraph("duplicate vertex id: " + vertices_[i]);
    for (std::size_t i = 0; i < vertices_.size(); ++i) vertex_index_[vertices_[i]] = i;

    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return a.id < b.id; });
    std::set<std::pair<VertexId, VertexId>> endpoint_pairs;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (i > 0 && e.id == edges_[i - 1].id)
            throw MalformedGraph("duplicate edge id: " + e.id);
        if (!vertex_index_.count(e.tail))
            throw MalformedGraph("edge " + e.id + " has unknown tail " + e.tail);
        if (!vertex_index_.count(e.head))
            throw MalformedGraph("edge " + e.id + " has unknown head " + e.head);
        if (e.tail == e.head)
            throw MalformedGraph("edge " + e.id + " is a self-loop");
        auto pair = std::minmax(e.tail, e.head);
        if (!endpoint_pairs.insert({pair.first, pair.second}).second)
            throw MalformedGraph("parallel edge " + e.id + " between " + e.tail + " and " + e.head);
        edge_index_[e.id] = i;
    }

    incident_.resize(vertices_.size());
    for (const Edge& e : edges_) {
        incident_[vertex_index_[e.tail]].push_back(e.id);
        incident_[vertex_index_[e.head]].push_back(e.id);
    }
    for (auto& list : incident_) std::sort(list.begin(), list.end());
}

std::size_t Graph::vertex_index(const VertexId& v) const {
    auto it = vertex_index_.find(v);
    if (it == vertex_index_.end()) throw UnknownVertex("unknown vertex: " + v);
    return it->second;
}

std::size_t Graph::edge_index(const EdgeId& e) const {
    auto it = edge_index_.find(e);
    if (it == edge_index_.end()) throw UnknownEdge("unknown edge: " + e);
    return it->second;
}

std::size_t Graph::valence(const VertexId& v) const {
    return incident_[vertex_index(v)].size();
}

const std::vector<EdgeId>& Graph::incident_edges(const VertexId& v) const {
    return incident_[vertex_index(v)];
}

bool Graph::incident(const EdgeId& e, const VertexId& v) const {
    const Edge& edge = edges_[edge_index(e)];
    return edge.tail == v || edge.head == v;
}

bool Graph::edges_meet(const EdgeId& e, const EdgeId& f) const {
    const Edge& a = edges_[edge_index(e)];
    const Edge& b = edges_[edge_index(f)];
    return a.tail == b.tail || a.tail == b.head || a.head == b.tail || a.head == b.head;
}

std::size_t Graph::component_count() const {
    std::vector<int> seen(vertices_.size(), 0);
    std::size_t components = 0;
    for (std::size_t start = 0; start < vertices_.size(); ++start) {
        if (seen[start]) continue;
        ++components;
        std::deque<std::size_t> queue{start};
        seen[start] = 1;
        while (!queue.empty()) {
            std::size_t v = queue.front();
            queue.pop_front();
            for (const EdgeId& eid : incident_[v]) {
                const Edge& e = edges_[edge_index_.at(eid)];
                std::size_t other =
                    vertex_index_.at(e.tail == vertices_[v] ? e.head : e.tail);
                if (!seen[other]) {
                    seen[other] = 1;
                    queue.push_back(other);
                }
            }
        }
    }
    return components;
}

bool Graph::connected() const { return component_count() == 1; }

long long Graph::first_betti() const {
    return static_cast<long long>(edge_count()) - static_cast<long long>(vertex_count()) +
           static_cast<long long>(component_count());
}

GraphClassification validate(const Graph& g) {
    GraphClassification c;
    c.connected = g.connected();
    c.euler = g.euler_characteristic();
    c.first_betti = g.first_betti();

    std::size_t valence_one = 0;
    std::size_t max_valence = 0;
    bool all_two = true;
    for (const VertexId& v : g.vertex_ids()) {
        std::size_t mu = g.valence(v);
        max_valence = std::max(max_valence, mu);
        if (mu == 1) ++valence_one;
        if (mu != 2) all_two = false;
        if (mu >= 3) c.essential_vertices.push_back(v);
    }

    c.circle_like = c.connected && all_two && g.edge_count() > 0;
    c.interval_like = c.connected && c.first_betti == 0 && max_valence <= 2 &&
                      (g.vertex_count() == 1 || valence_one == 2);
    return c;
}

std::map<VertexId, mpz_class> chain_boundary(const Graph& g, const EdgeChain& c) {
    std::map<VertexId, mpz_class> out;
    for (const auto& [eid, coeff] : c) {
        if (sgn(coeff) == 0) continue;
        const Edge& e = g.edge(eid);
        out[e.head] += coeff;
        out[e.tail] -= coeff;
    }
    for (auto it = out.begin(); it != out.end();)
        it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
    return out;
}

bool is_cycle(const Graph& g, const EdgeChain& c) {
    return chain_boundary(g, c).empty();
}

Graph subdivide(const Graph& g, const std::map<EdgeId, unsigned>& parts) {
    for (const auto& [eid, count] : parts) {
        if (!g.has_edge(eid)) throw UnknownEdge("unknown edge: " + eid);
        if (count == 0) throw ZeroParts("subdivision count for edge " + eid + " is zero");
    }

    std::vector<VertexId> vertices = g.vertex_ids();
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        auto it = parts.find(e.id);
        unsigned k = (it == parts.end()) ? 1u : it->second;
        if (k == 1) {
            edges.push_back(e);
            continue;
        }
        VertexId prev = e.tail;
        for (unsigned s = 1; s <= k; ++s) {
            VertexId next = (s == k) ? e.head : e.id + ".v" + std::to_string(s);
            if (s < k) vertices.push_back(next);
            edges.push_back(Edge{e.id + "." + std::to_string(s), prev, next});
            prev = next;
        }
    }
    return Graph(std::move(vertices), std::move(edges));
}

std::vector<EdgeChain> fundamental_cycle_basis(const Graph& g) {
    return fundamental_cycle_basis(g, g.vertex_ids().front());
}

std::vector<EdgeChain> fundamental_cycle_basis(const Graph& g, const VertexId& root) {
    if (!g.connected()) throw Disconnected("cycle basis requires a connected graph");
    const std::size_t root_idx = g.vertex_index(root);

    // Breadth-first tree; parent_edge[v] leads one step toward the root.
    std::vector<int> visited(g.vertex_count(), 0);
    std::vector<std::size_t> parent_vertex(g.vertex_count(), 0);
    std::vector<EdgeId> parent_edge(g.vertex_count());
    std::set<EdgeId> tree_edges;
    std::deque<std::size_t> queue{root_idx};
    visited[root_idx] = 1;
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (const EdgeId& eid : g.incident_edges(g.vertex_ids()[v])) {
            const Edge& e = g.edge(eid);
            std::size_t other = g.vertex_index(e.tail == g.vertex_ids()[v] ? e.head : e.tail);
            if (!visited[other]) {
                visited[other] = 1;
                parent_vertex[other] = v;
                parent_edge[other] = eid;
                tree_edges.insert(eid);
                queue.push_back(other);
            }
        }
    }

    auto path_to_root = [&](std::size_t v) {
        std::vector<std::size_t> path{v};
        while (path.back() != root_idx) path.push_back(parent_vertex[path.back()]);
        return path;
    };

    std::vector<EdgeChain> basis;
    for (const Edge& e : g.edges()) {
        if (tree_edges.count(e.id)) continue;
        EdgeChain chain;
        chain[e.id] = 1;
        // Tree path from head back to tail, common tail stripped at the
        // lowest shared ancestor.
        std::vector<std::size_t> from_head = path_to_root(g.vertex_index(e.head));
        std::vector<std::size_t> from_tail = path_to_root(g.vertex_index(e.tail));
        while (from_head.size() > 1 && from_tail.size() > 1 &&
               from_head[from_head.size() - 2] == from_tail[from_tail.size() - 2]) {
            from_head.pop_back();
            from_tail.pop_back();
        }
        auto add_step = [&](std::size_t from, std::size_t to) {
            // Walk from `from` one tree step down to its parent `to`.
            const Edge& t = g.edge(parent_edge[from]);
            bool along = (t.tail == g.vertex_ids()[from] && t.head == g.vertex_ids()[to]);
            chain[t.id] += along ? 1 : -1;
        };
        for (std::size_t i = 0; i + 1 < from_head.size(); ++i)
            add_step(from_head[i], from_head[i + 1]);
        for (std::size_t i = from_tail.size(); i-- > 1;) {
            // Reverse direction: from parent to child flips the sign.
            const Edge& t = g.edge(parent_edge[from_tail[i - 1]]);
            bool along = (t.tail == g.vertex_ids()[from_tail[i]] &&
                          t.head == g.vertex_ids()[from_tail[i - 1]]);
            chain[t.id] += along ? 1 : -1;
        }
        for (auto it = chain.begin(); it != chain.end();)
            it = sgn(it->second) == 0 ? chain.erase(it) : std::next(it);
        basis.push_back(std::move(chain));
    }
    return basis;
}

}  // namespace graphconf
