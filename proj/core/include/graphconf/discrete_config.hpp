#pragma once

#include <map>
#include <utility>
#include <vector>

#include "graphconf/cells.hpp"
#include "graphconf/graph.hpp"
#include "graphconf/int_matrix.hpp"
#include "graphconf/smith.hpp"

namespace graphconf {

/// The discretized configuration space D(Gamma, 2): configurations of two
/// ordered particles whose closed supports are disjoint. A 2-dimensional
/// cell complex inside Gamma x Gamma.
///
/// Cells, all enumerated in lexicographic order of their labels:
///   0-cells  (u, v)   ordered pairs of distinct vertices;
///   1-cells  (e, v) horizontal and (v, e) vertical, v not an endpoint of e
///            (horizontal block first);
///   2-cells  (e, e') ordered pairs of edges sharing no vertex.
struct DiscreteConfigComplex {
    std::vector<std::pair<VertexId, VertexId>> cells0;
    std::vector<Cell1> cells1;
    std::vector<std::pair<EdgeId, EdgeId>> cells2;
    IntMatrix boundary1;  // cells0 x cells1
    IntMatrix boundary2;  // cells1 x cells2

    std::map<std::pair<VertexId, VertexId>, std::size_t> cell0_index;
    std::map<Cell1, std::size_t> cell1_index;
    std::map<std::pair<EdgeId, EdgeId>, std::size_t> cell2_index;

    long long euler_characteristic() const {
        return static_cast<long long>(cells0.size()) - static_cast<long long>(cells1.size()) +
               static_cast<long long>(cells2.size());
    }
};

/// Build D(Gamma, 2) with boundary maps. Boundary signs follow the product
/// rule d(a x b) = (da) x b + (-1)^dim(a) a x (db) with de = head - tail,
/// so d o d = 0 holds with no per-cell orientation choices.
DiscreteConfigComplex build_discrete_config(const Graph& g);

/// chi(Gamma)^2 + chi(Gamma) - sum_v (mu(v)-1)(mu(v)-2). Must equal the
/// alternating cell-count sum of D(Gamma, 2).
long long euler_characteristic_formula(const Graph& g);

/// Full integral homology of D(Gamma, 2) by Smith reduction of the two
/// boundary matrices. Degrees 0..2.
HomologySummary homology_oracle(const DiscreteConfigComplex& complex);

/// Rank of the map induced on H_1 by the inclusion D(Gamma, 2) into
/// Gamma x Gamma. For a connected graph not homeomorphic to the circle
/// this must equal 2 * b_1(Gamma) (the inclusion is onto in degree one).
std::size_t inclusion_h1_rank(const Graph& g, const DiscreteConfigComplex& complex);

}  // namespace graphconf
