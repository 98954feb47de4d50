#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "graphconf/discrete_config.hpp"
#include "graphconf/graph.hpp"
#include "graphconf/intersection_form.hpp"

namespace graphconf {

/// Counterclockwise cyclic order of the incident edges at each vertex.
using RotationSystem = std::map<VertexId, std::vector<EdgeId>>;

/// One directed traversal of an edge inside a face walk.
struct DirectedEdge {
    EdgeId edge;
    bool reversed = false;  // true: traversed head -> tail

    bool operator==(const DirectedEdge& o) const {
        return edge == o.edge && reversed == o.reversed;
    }
};

/// Designates the unbounded face: a directed edge traversal lying on its
/// boundary walk. A combinatorial map cannot tell the outer face apart,
/// so the caller must name it.
struct OuterMarker {
    EdgeId edge;
    bool reversed = false;
};

/// Faces of a planar embedding given by a rotation system.
///
/// faces[0] is the outer face; faces[1..r] are the bounded faces in
/// discovery order. face_cycles[i] is z_i, the boundary of face i as an
/// integer edge chain with the bounded faces oriented anticlockwise;
/// z_0 surrounds the whole graph anticlockwise, which makes
/// z_0 = z_1 + ... + z_r hold on the nose.
struct PlanarStructure {
    std::vector<std::vector<DirectedEdge>> faces;
    std::vector<EdgeChain> face_cycles;
    std::size_t outer_index = 0;  // always 0 after canonical reordering
    std::vector<std::set<VertexId>> face_vertices;
    std::vector<std::set<EdgeId>> face_edges;

    std::size_t bounded_count() const { return faces.empty() ? 0 : faces.size() - 1; }
};

/// Trace all faces: the successor of a directed edge is the rotation
/// predecessor of its reversal at the head vertex, which keeps each face
/// on its left. Face count must satisfy Euler's relation, otherwise the
/// rotation system is rejected (not planar).
PlanarStructure trace_faces(const Graph& g, const RotationSystem& rotations,
                            const OuterMarker& outer);

/// Ordered pairs (i, j), i != j, of faces whose closures are disjoint,
/// i.e. whose boundary walks share no vertex. Both orders are stored.
struct DisjointPairSet {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

DisjointPairSet disjoint_pairs(const PlanarStructure& ps);

/// Expand z_i (x) z_j for a face pair (index 0 expands via z_0 = sum z_k)
/// into coordinates over the bounded-face tensor basis.
std::vector<mpz_class> torus_tensor(const PlanarStructure& ps, std::size_t i, std::size_t j);

/// Verify that the torus tensors of the disjoint pairs all lie in the
/// kernel of the intersection form, are linearly independent, and that
/// their count equals the kernel's rank. The intersection matrix must be
/// built on the bounded-face basis z_1..z_r.
bool torus_basis_check(const PlanarStructure& ps, const DisjointPairSet& pairs,
                       const IntersectionMatrix& im);

/// The embedding conditions under which the closed Betti formulas hold:
/// every vertex essential, every face walk a simple cycle (a conservative
/// stand-in for contractible closures, circle-like outer closure), and
/// every nonempty pairwise closure intersection connected.
struct EmbeddingRegularity {
    bool valence_ok = false;
    bool faces_simple = false;
    bool intersections_connected = false;

    bool all() const { return valence_ok && faces_simple && intersections_connected; }
};

EmbeddingRegularity check_embedding_regularity(const PlanarStructure& ps, const Graph& g);

/// Closed-form Betti numbers of the configuration space for regular
/// embeddings: b1 = 2 b_1(Gamma) + 1 and
/// b2 = b_1(Gamma)^2 - b_1(Gamma) + 2 - sum_v (mu(v)-1)(mu(v)-2).
/// Throws HypothesisViolated unless the regularity checks all pass.
std::pair<long long, long long> planar_betti_formulas(const PlanarStructure& ps, const Graph& g);

/// Generating 1-cycles of H_1 of the configuration space: for each
/// bounded face i the cycles (c_i, v_i) and (v_i, c_i), where c_i is the
/// face boundary and v_i a stationary vertex off the boundary, plus one
/// triple-edge cycle at an essential vertex (two particles swapping
/// around a branch point). cycles are chains in the 1-cells of
/// D(Gamma, 2), ordered: all (c_i, v_i), then all (v_i, c_i), then the
/// triple cycle.
struct H1Generators {
    std::vector<std::vector<mpz_class>> cycles;
    std::vector<VertexId> stationary;  // v_i per bounded face
    VertexId triple_vertex;
    std::array<EdgeId, 3> triple_edges;
    std::size_t rank = 0;  // rank of the spanned subspace of H_1(D; Q)
};

H1Generators h1_generator_cycles(const PlanarStructure& ps, const Graph& g,
                                 const DiscreteConfigComplex& complex);

}  // namespace graphconf
