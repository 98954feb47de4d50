#include "graphconf/discrete_config.hpp"

#include <algorithm>

namespace graphconf {

DiscreteConfigComplex build_discrete_config(const Graph& g) {
    DiscreteConfigComplex d;

    for (const VertexId& u : g.vertex_ids())
        for (const VertexId& v : g.vertex_ids())
            if (u != v) d.cells0.push_back({u, v});

    for (const Edge& e : g.edges())
        for (const VertexId& v : g.vertex_ids())
            if (v != e.tail && v != e.head) d.cells1.push_back({false, e.id, v});
    for (const VertexId& v : g.vertex_ids())
        for (const Edge& e : g.edges())
            if (v != e.tail && v != e.head) d.cells1.push_back({true, e.id, v});
    std::sort(d.cells1.begin(), d.cells1.end());

    for (const Edge& e : g.edges())
        for (const Edge& f : g.edges())
            if (!g.edges_meet(e.id, f.id)) d.cells2.push_back({e.id, f.id});

    for (std::size_t i = 0; i < d.cells0.size(); ++i) d.cell0_index[d.cells0[i]] = i;
    for (std::size_t i = 0; i < d.cells1.size(); ++i) d.cell1_index[d.cells1[i]] = i;
    for (std::size_t i = 0; i < d.cells2.size(); ++i) d.cell2_index[d.cells2[i]] = i;

    d.boundary1 = IntMatrix(d.cells0.size(), d.cells1.size());
    for (std::size_t j = 0; j < d.cells1.size(); ++j) {
        const Cell1& c = d.cells1[j];
        const Edge& e = g.edge(c.edge);
        if (!c.vertical) {
            // d(e, v) = (head, v) - (tail, v)
            d.boundary1(d.cell0_index.at({e.head, c.vertex}), j) += 1;
            d.boundary1(d.cell0_index.at({e.tail, c.vertex}), j) -= 1;
        } else {
            // d(v, e) = (v, head) - (v, tail)
            d.boundary1(d.cell0_index.at({c.vertex, e.head}), j) += 1;
            d.boundary1(d.cell0_index.at({c.vertex, e.tail}), j) -= 1;
        }
    }

    d.boundary2 = IntMatrix(d.cells1.size(), d.cells2.size());
    for (std::size_t j = 0; j < d.cells2.size(); ++j) {
        const Edge& e = g.edge(d.cells2[j].first);
        const Edge& f = g.edge(d.cells2[j].second);
        // d(e x f) = (de) x f - e x (df); all four terms are cells of D
        // because the edges share no endpoint.
        d.boundary2(d.cell1_index.at({true, f.id, e.head}), j) += 1;
        d.boundary2(d.cell1_index.at({true, f.id, e.tail}), j) -= 1;
        d.boundary2(d.cell1_index.at({false, e.id, f.head}), j) -= 1;
        d.boundary2(d.cell1_index.at({false, e.id, f.tail}), j) += 1;
    }

    return d;
}

long long euler_characteristic_formula(const Graph& g) {
    long long chi = g.euler_characteristic();
    long long penalty = 0;
    for (const VertexId& v : g.vertex_ids()) {
        long long mu = static_cast<long long>(g.valence(v));
        penalty += (mu - 1) * (mu - 2);
    }
    return chi * chi + chi - penalty;
}

HomologySummary homology_oracle(const DiscreteConfigComplex& complex) {
    return chain_homology({complex.cells0.size(), complex.cells1.size(), complex.cells2.size()},
                          {&complex.boundary1, &complex.boundary2});
}

std::size_t inclusion_h1_rank(const Graph& g, const DiscreteConfigComplex& complex) {
    GraphClassification c = validate(g);
    if (!c.connected)
        throw HypothesisViolated("inclusion rank requires a connected graph");
    if (c.circle_like)
        throw HypothesisViolated("inclusion rank is undefined for circle-like graphs");

    // Composing the inclusion with the two coordinate projections
    // Gamma x Gamma -> Gamma identifies H_1(Gamma x Gamma) with
    // H_1(Gamma) + H_1(Gamma); on chains a horizontal cell (e, v)
    // projects to (e, 0) and a vertical cell (v, e) to (0, e). Product
    // 2-cells project to zero, so boundaries die and the rank of the
    // projected cycle space equals the rank of the induced map.
    IntMatrix cycles = kernel_basis(complex.boundary1);
    const std::size_t E = g.edge_count();
    IntMatrix projected(2 * E, cycles.cols());
    for (std::size_t j = 0; j < cycles.cols(); ++j) {
        for (std::size_t i = 0; i < complex.cells1.size(); ++i) {
            const mpz_class& coeff = cycles(i, j);
            if (sgn(coeff) == 0) continue;
            const Cell1& cell = complex.cells1[i];
            std::size_t e = g.edge_index(cell.edge);
            projected(cell.vertical ? E + e : e, j) += coeff;
        }
    }
    return rank(projected);
}

}  // namespace graphconf
