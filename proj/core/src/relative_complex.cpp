#include "graphconf/relative_complex.hpp"

#include <algorithm>

namespace graphconf {

RelativeComplex build_relative_complex(const Graph& g) {
    RelativeComplex n;

    for (const Edge& e : g.edges())
        for (const Edge& f : g.edges())
            if (g.edges_meet(e.id, f.id)) n.cells2.push_back({e.id, f.id});

    for (const Edge& e : g.edges()) {
        n.cells1.push_back({false, e.id, e.tail});
        n.cells1.push_back({false, e.id, e.head});
        n.cells1.push_back({true, e.id, e.tail});
        n.cells1.push_back({true, e.id, e.head});
    }
    std::sort(n.cells1.begin(), n.cells1.end());

    n.cells0 = g.vertex_ids();

    for (std::size_t i = 0; i < n.cells2.size(); ++i) n.cell2_index[n.cells2[i]] = i;
    for (std::size_t i = 0; i < n.cells1.size(); ++i) n.cell1_index[n.cells1[i]] = i;
    for (std::size_t i = 0; i < n.cells0.size(); ++i) n.cell0_index[n.cells0[i]] = i;

    // Product-rule boundary with generators in dN deleted: a term (v, e')
    // or (e, v) survives only when v is an endpoint of the paired edge.
    n.boundary2 = IntMatrix(n.cells1.size(), n.cells2.size());
    for (std::size_t j = 0; j < n.cells2.size(); ++j) {
        const Edge& e = g.edge(n.cells2[j].first);
        const Edge& f = g.edge(n.cells2[j].second);
        auto add = [&](Cell1 cell, int sign) {
            const Edge& carrier = g.edge(cell.edge);
            if (cell.vertex != carrier.tail && cell.vertex != carrier.head) return;
            n.boundary2(n.cell1_index.at(cell), j) += sign;
        };
        add({true, f.id, e.head}, +1);
        add({true, f.id, e.tail}, -1);
        add({false, e.id, f.head}, -1);
        add({false, e.id, f.tail}, +1);
    }

    n.boundary1 = IntMatrix(n.cells0.size(), n.cells1.size());
    for (std::size_t j = 0; j < n.cells1.size(); ++j) {
        const Cell1& c = n.cells1[j];
        const Edge& e = g.edge(c.edge);
        // Only the diagonal endpoint of each term survives:
        // d(v, e) = d(e, v) = (v,v) if v = head, -(v,v) if v = tail.
        if (c.vertex == e.head)
            n.boundary1(n.cell0_index.at(c.vertex), j) += 1;
        else
            n.boundary1(n.cell0_index.at(c.vertex), j) -= 1;
    }

    return n;
}

RelativeH2 relative_h2(const RelativeComplex& complex) {
    RelativeH2 h2;
    h2.kernel = kernel_basis(complex.boundary2);
    h2.rank = h2.kernel.cols();
    return h2;
}

long long h2_rank_formula(const Graph& g) {
    long long sum = 0;
    for (const VertexId& v : g.vertex_ids()) {
        long long mu = static_cast<long long>(g.valence(v));
        sum += (mu - 1) * (mu - 2);
    }
    return g.first_betti() - 1 + sum;
}

bool rank_formula_check(const Graph& g, const RelativeComplex& complex, const RelativeH2& h2) {
    GraphClassification c = validate(g);
    if (!c.connected || c.circle_like || c.interval_like)
        throw HypothesisViolated(
            "rank formula requires a connected graph homeomorphic to neither the circle nor "
            "the interval");

    long long expected = h2_rank_formula(g);
    if (static_cast<long long>(h2.rank) != expected) return false;

    // H_0 = coker(d1) and H_1 = ker(d1)/im(d2) must both vanish: d1 has
    // full row rank with unit invariant factors, and d2 fills the whole
    // cycle space of degree one, again with unit factors.
    std::vector<mpz_class> f1 = invariant_factors(complex.boundary1);
    if (f1.size() != complex.cells0.size()) return false;
    for (const auto& d : f1)
        if (d != 1) return false;

    std::vector<mpz_class> f2 = invariant_factors(complex.boundary2);
    if (f1.size() + f2.size() != complex.cells1.size()) return false;
    for (const auto& d : f2)
        if (d != 1) return false;

    return true;
}

}  // namespace graphconf
