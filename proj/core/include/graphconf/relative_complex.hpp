#pragma once

#include <map>
#include <utility>
#include <vector>

#include "graphconf/cells.hpp"
#include "graphconf/graph.hpp"
#include "graphconf/int_matrix.hpp"
#include "graphconf/smith.hpp"

namespace graphconf {

/// Relative cellular chain complex of the pair (N, dN), where N is the
/// closed neighbourhood of the diagonal in Gamma x Gamma and dN is its
/// frontier inside D(Gamma, 2). Generators are the cells of N that do not
/// lie in dN:
///   2-cells  (e, e') with e and e' sharing a vertex (e = e' included);
///   1-cells  (v, e) and (e, v) with v an endpoint of e;
///   0-cells  the diagonal pairs (v, v).
/// The boundary is the product-rule boundary with every generator that
/// falls into dN deleted (the relative quotient).
struct RelativeComplex {
    std::vector<std::pair<EdgeId, EdgeId>> cells2;
    std::vector<Cell1> cells1;
    std::vector<VertexId> cells0;
    IntMatrix boundary2;  // cells1 x cells2
    IntMatrix boundary1;  // cells0 x cells1

    std::map<std::pair<EdgeId, EdgeId>, std::size_t> cell2_index;
    std::map<Cell1, std::size_t> cell1_index;
    std::map<VertexId, std::size_t> cell0_index;
};

RelativeComplex build_relative_complex(const Graph& g);

/// H_2(N, dN) as an explicit subgroup of the 2-chains: the kernel of the
/// relative boundary (there are no 3-cells, so the group is free).
struct RelativeH2 {
    IntMatrix kernel;  // cells2 x rank; columns form a saturated basis
    std::size_t rank = 0;
};

RelativeH2 relative_h2(const RelativeComplex& complex);

/// b_1(Gamma) - 1 + sum_v (mu(v)-1)(mu(v)-2): the expected rank of
/// H_2(N, dN) for connected graphs homeomorphic to neither the circle
/// nor the interval.
long long h2_rank_formula(const Graph& g);

/// True iff the computed rank matches h2_rank_formula and the boundary
/// matrices certify H_0(N, dN) = H_1(N, dN) = 0. Throws for graphs
/// excluded from the hypotheses (circle-like, interval-like, disconnected).
bool rank_formula_check(const Graph& g, const RelativeComplex& complex, const RelativeH2& h2);

}  // namespace graphconf
