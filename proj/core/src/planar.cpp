#include "graphconf/planar.hpp"

#include <algorithm>
#include <deque>

namespace graphconf {

namespace {

VertexId origin(const Graph& g, const DirectedEdge& h) {
    const Edge& e = g.edge(h.edge);
    return h.reversed ? e.head : e.tail;
}

VertexId target(const Graph& g, const DirectedEdge& h) {
    const Edge& e = g.edge(h.edge);
    return h.reversed ? e.tail : e.head;
}

}  // namespace

PlanarStructure trace_faces(const Graph& g, const RotationSystem& rotations,
                            const OuterMarker& outer) {
    if (!g.connected()) throw Disconnected("face tracing requires a connected graph");

    // Each vertex must list exactly its incident edges, once each.
    for (const VertexId& v : g.vertex_ids()) {
        auto it = rotations.find(v);
        if (it == rotations.end())
            throw BadRotation("no rotation given for vertex " + v);
        std::vector<EdgeId> sorted = it->second;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != g.incident_edges(v))
            throw BadRotation("rotation at vertex " + v +
                              " does not list its incident edges exactly once");
    }
    for (const auto& [v, list] : rotations)
        if (!g.has_vertex(v)) throw BadRotation("rotation for unknown vertex " + v);

    auto successor = [&](const DirectedEdge& h) -> DirectedEdge {
        // Rotation predecessor of the reversed dart at the head of h: with
        // counterclockwise rotations this keeps each face on the left, so
        // bounded faces are traced anticlockwise.
        VertexId at = target(g, h);
        const std::vector<EdgeId>& rho = rotations.at(at);
        auto pos = std::find(rho.begin(), rho.end(), h.edge);
        const EdgeId& next = (pos == rho.begin()) ? rho.back() : *std::prev(pos);
        const Edge& e = g.edge(next);
        return DirectedEdge{next, e.tail != at};
    };

    // Orbits of the successor permutation, seeded in lexicographic order
    // of (edge id, direction) so the discovery order is reproducible.
    std::map<std::pair<EdgeId, bool>, std::size_t> face_of;
    std::vector<std::vector<DirectedEdge>> walks;
    for (const Edge& e : g.edges()) {
        for (bool reversed : {false, true}) {
            DirectedEdge start{e.id, reversed};
            if (face_of.count({start.edge, start.reversed})) continue;
            std::vector<DirectedEdge> walk;
            DirectedEdge h = start;
            do {
                face_of[{h.edge, h.reversed}] = walks.size();
                walk.push_back(h);
                h = successor(h);
            } while (!(h == start));
            walks.push_back(std::move(walk));
        }
    }

    long long expected =
        static_cast<long long>(g.edge_count()) - static_cast<long long>(g.vertex_count()) + 2;
    if (static_cast<long long>(walks.size()) != expected)
        throw EulerMismatch("rotation system yields " + std::to_string(walks.size()) +
                            " faces, planarity requires " + std::to_string(expected));

    if (!g.has_edge(outer.edge)) throw BadOuterMarker("unknown edge: " + outer.edge);
    std::size_t outer_walk = face_of.at({outer.edge, outer.reversed});

    // Canonical order: outer face first, bounded faces in discovery order.
    PlanarStructure ps;
    ps.outer_index = 0;
    ps.faces.push_back(walks[outer_walk]);
    for (std::size_t w = 0; w < walks.size(); ++w)
        if (w != outer_walk) ps.faces.push_back(walks[w]);

    for (const auto& walk : ps.faces) {
        EdgeChain cycle;
        std::set<VertexId> vertices;
        std::set<EdgeId> edges;
        for (const DirectedEdge& h : walk) {
            cycle[h.edge] += h.reversed ? -1 : 1;
            vertices.insert(origin(g, h));
            edges.insert(h.edge);
        }
        for (auto it = cycle.begin(); it != cycle.end();)
            it = sgn(it->second) == 0 ? cycle.erase(it) : std::next(it);
        ps.face_cycles.push_back(std::move(cycle));
        ps.face_vertices.push_back(std::move(vertices));
        ps.face_edges.push_back(std::move(edges));
    }

    // With counterclockwise rotations the traced walk of a bounded face
    // runs anticlockwise while the outer walk runs clockwise around the
    // graph; negating the outer cycle makes z_0 = z_1 + ... + z_r exact.
    for (auto& [eid, coeff] : ps.face_cycles[0]) coeff = -coeff;

    return ps;
}

DisjointPairSet disjoint_pairs(const PlanarStructure& ps) {
    DisjointPairSet out;
    const std::size_t n = ps.faces.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const auto& a = ps.face_vertices[i];
            const auto& b = ps.face_vertices[j];
            bool meet = std::any_of(a.begin(), a.end(),
                                    [&](const VertexId& v) { return b.count(v) != 0; });
            if (!meet) out.pairs.push_back({i, j});
        }
    }
    return out;
}

std::vector<mpz_class> torus_tensor(const PlanarStructure& ps, std::size_t i, std::size_t j) {
    const std::size_t r = ps.bounded_count();
    // Coordinates of z_k in the bounded-face basis; z_0 = sum of all.
    auto coords = [&](std::size_t k) {
        std::vector<mpz_class> v(r);
        if (k == 0)
            for (auto& c : v) c = 1;
        else
            v[k - 1] = 1;
        return v;
    };
    std::vector<mpz_class> a = coords(i), b = coords(j);
    std::vector<mpz_class> tensor(r * r);
    for (std::size_t p = 0; p < r; ++p)
        for (std::size_t q = 0; q < r; ++q) tensor[p * r + q] = a[p] * b[q];
    return tensor;
}

bool torus_basis_check(const PlanarStructure& ps, const DisjointPairSet& pairs,
                       const IntersectionMatrix& im) {
    const std::size_t r = ps.bounded_count();
    if (im.basis.size() != r) return false;

    IntMatrix tensors(r * r, pairs.pairs.size());
    for (std::size_t k = 0; k < pairs.pairs.size(); ++k) {
        auto [i, j] = pairs.pairs[k];
        std::vector<mpz_class> t = torus_tensor(ps, i, j);
        // Each tensor must be annihilated by the intersection form.
        std::vector<mpz_class> image = im.h2_coordinates.apply(t);
        for (const auto& c : image)
            if (sgn(c) != 0) return false;
        tensors.set_column(k, t);
    }

    if (rank(tensors) != pairs.pairs.size()) return false;
    std::size_t nullity = r * r - rank(im.h2_coordinates);
    return pairs.pairs.size() == nullity;
}

EmbeddingRegularity check_embedding_regularity(const PlanarStructure& ps, const Graph& g) {
    EmbeddingRegularity reg;

    reg.valence_ok = true;
    for (const VertexId& v : g.vertex_ids())
        if (g.valence(v) < 3) reg.valence_ok = false;

    reg.faces_simple = true;
    for (const auto& walk : ps.faces) {
        std::set<VertexId> seen;
        for (const DirectedEdge& h : walk)
            if (!seen.insert(origin(g, h)).second) reg.faces_simple = false;
    }

    // Every nonempty closure intersection must be connected: take the
    // common walk vertices and common walk edges and check the subgraph
    // they span has one component.
    reg.intersections_connected = true;
    const std::size_t n = ps.faces.size();
    for (std::size_t i = 0; i < n && reg.intersections_connected; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<VertexId> shared;
            std::set_intersection(ps.face_vertices[i].begin(), ps.face_vertices[i].end(),
                                  ps.face_vertices[j].begin(), ps.face_vertices[j].end(),
                                  std::back_inserter(shared));
            if (shared.empty()) continue;
            std::set<EdgeId> shared_edges;
            std::set_intersection(ps.face_edges[i].begin(), ps.face_edges[i].end(),
                                  ps.face_edges[j].begin(), ps.face_edges[j].end(),
                                  std::inserter(shared_edges, shared_edges.end()));

            std::map<VertexId, std::size_t> index;
            for (std::size_t k = 0; k < shared.size(); ++k) index[shared[k]] = k;
            std::vector<int> seen(shared.size(), 0);
            std::deque<std::size_t> queue{0};
            seen[0] = 1;
            std::size_t reached = 1;
            while (!queue.empty()) {
                std::size_t v = queue.front();
                queue.pop_front();
                for (const EdgeId& eid : shared_edges) {
                    const Edge& e = g.edge(eid);
                    if (e.tail != shared[v] && e.head != shared[v]) continue;
                    const VertexId& other = (e.tail == shared[v]) ? e.head : e.tail;
                    auto it = index.find(other);
                    if (it != index.end() && !seen[it->second]) {
                        seen[it->second] = 1;
                        ++reached;
                        queue.push_back(it->second);
                    }
                }
            }
            if (reached != shared.size()) {
                reg.intersections_connected = false;
                break;
            }
        }
    }
    return reg;
}

std::pair<long long, long long> planar_betti_formulas(const PlanarStructure& ps, const Graph& g) {
    EmbeddingRegularity reg = check_embedding_regularity(ps, g);
    if (!reg.all())
        throw HypothesisViolated("embedding does not satisfy the regularity conditions");

    long long b1 = g.first_betti();
    long long sum = 0;
    for (const VertexId& v : g.vertex_ids()) {
        long long mu = static_cast<long long>(g.valence(v));
        sum += (mu - 1) * (mu - 2);
    }
    return {2 * b1 + 1, b1 * b1 - b1 + 2 - sum};
}

H1Generators h1_generator_cycles(const PlanarStructure& ps, const Graph& g,
                                 const DiscreteConfigComplex& complex) {
    const std::size_t r = ps.bounded_count();
    H1Generators gens;

    GraphClassification cls = validate(g);
    if (cls.essential_vertices.empty())
        throw NoEssentialVertex("graph has no vertex of valence at least 3");

    auto face_cycle_times_vertex = [&](std::size_t face, const VertexId& v, bool vertex_first) {
        std::vector<mpz_class> chain(complex.cells1.size());
        for (const auto& [eid, coeff] : ps.face_cycles[face]) {
            Cell1 cell{vertex_first, eid, v};
            chain[complex.cell1_index.at(cell)] += coeff;
        }
        return chain;
    };

    // Stationary vertex per bounded face: lexicographically smallest
    // vertex off the boundary walk.
    for (std::size_t i = 1; i <= r; ++i) {
        const auto& boundary = ps.face_vertices[i];
        VertexId chosen;
        bool found = false;
        for (const VertexId& v : g.vertex_ids()) {
            if (!boundary.count(v)) {
                chosen = v;
                found = true;
                break;
            }
        }
        if (!found)
            throw NoOffBoundaryVertex("no vertex lies off the boundary of face " +
                                      std::to_string(i));
        gens.stationary.push_back(chosen);
    }
    for (std::size_t i = 1; i <= r; ++i)
        gens.cycles.push_back(face_cycle_times_vertex(i, gens.stationary[i - 1], false));
    for (std::size_t i = 1; i <= r; ++i)
        gens.cycles.push_back(face_cycle_times_vertex(i, gens.stationary[i - 1], true));

    // Triple cycle at the smallest essential vertex: both particles swap
    // around the branch point along the first three incident edges.
    const VertexId& u = cls.essential_vertices.front();
    const std::vector<EdgeId>& incident = g.incident_edges(u);
    gens.triple_vertex = u;
    gens.triple_edges = {incident[0], incident[1], incident[2]};

    // With all three edges re-oriented toward u, the cycle is
    // sum over permutations (i j k) of sign * ((v_i, e_j) + (e_j, v_i));
    // an edge whose given orientation points away from u contributes with
    // the opposite sign.
    std::vector<mpz_class> triple(complex.cells1.size());
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    static const int signs[6] = {1, -1, -1, 1, 1, -1};
    std::array<VertexId, 3> far_vertex;
    std::array<int, 3> toward_u;
    for (int k = 0; k < 3; ++k) {
        const Edge& e = g.edge(gens.triple_edges[k]);
        far_vertex[k] = (e.head == u) ? e.tail : e.head;
        toward_u[k] = (e.head == u) ? 1 : -1;
    }
    for (int p = 0; p < 6; ++p) {
        int i = perms[p][0], j = perms[p][1];
        mpz_class coeff = signs[p] * toward_u[j];
        triple[complex.cell1_index.at({true, gens.triple_edges[j], far_vertex[i]})] += coeff;
        triple[complex.cell1_index.at({false, gens.triple_edges[j], far_vertex[i]})] += coeff;
    }
    gens.cycles.push_back(std::move(triple));

    // Every generator must be a 1-cycle of D.
    for (const auto& cycle : gens.cycles) {
        std::vector<mpz_class> b = complex.boundary1.apply(cycle);
        for (const auto& v : b)
            if (sgn(v) != 0) throw SolveFailure("generator chain is not a cycle");
    }

    // Rank of the homology classes: boundaries of 2-cells map to zero, so
    // stack the generator chains against im(d2) and subtract its rank.
    IntMatrix stacked(complex.cells1.size(), gens.cycles.size() + complex.cells2.size());
    for (std::size_t k = 0; k < gens.cycles.size(); ++k)
        stacked.set_column(k, gens.cycles[k]);
    for (std::size_t j = 0; j < complex.cells2.size(); ++j)
        for (std::size_t i = 0; i < complex.cells1.size(); ++i)
            stacked(i, gens.cycles.size() + j) = complex.boundary2(i, j);
    gens.rank = rank(stacked) - rank(complex.boundary2);

    return gens;
}

}  // namespace graphconf
