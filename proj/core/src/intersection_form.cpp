#include "graphconf/intersection_form.hpp"

namespace graphconf {

std::vector<mpz_class> intersection_tensor(const Graph& g, const EdgeChain& z,
                                           const EdgeChain& zp, const RelativeComplex& complex) {
    if (!is_cycle(g, z) || !is_cycle(g, zp))
        throw NotACycle("intersection tensor requires cycles");

    std::vector<mpz_class> out(complex.cells2.size());
    for (const auto& [e, n] : z) {
        if (sgn(n) == 0) continue;
        for (const auto& [f, m] : zp) {
            if (sgn(m) == 0) continue;
            auto it = complex.cell2_index.find({e, f});
            if (it != complex.cell2_index.end()) out[it->second] = n * m;
        }
    }
    return out;
}

mpz_class scalar_form(const Graph& g, const EdgeId& e, const EdgeId& ep, const EdgeChain& z,
                      const EdgeChain& zp) {
    if (!g.edges_meet(e, ep))
        throw NonAdjacentEdges("edges " + e + " and " + ep + " share no vertex");
    if (!is_cycle(g, z) || !is_cycle(g, zp)) throw NotACycle("scalar form requires cycles");

    auto coeff = [](const EdgeChain& c, const EdgeId& id) {
        auto it = c.find(id);
        return it == c.end() ? mpz_class(0) : it->second;
    };
    return coeff(z, e) * coeff(zp, ep);
}

IntersectionMatrix build_intersection_matrix(const Graph& g, const CycleBasis& basis,
                                             const RelativeComplex& complex,
                                             const RelativeH2& h2) {
    const std::size_t r = basis.size();
    IntersectionMatrix im;
    im.basis = basis;
    im.matrix = IntMatrix(complex.cells2.size(), r * r);
    im.h2_coordinates = IntMatrix(h2.rank, r * r);

    LatticeSolver solver(h2.kernel);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            std::vector<mpz_class> column = intersection_tensor(g, basis[i], basis[j], complex);
            im.matrix.set_column(i * r + j, column);
            auto coords = solver.solve(column);
            if (!coords)
                throw SolveFailure("intersection column is not a relative 2-cycle");
            im.h2_coordinates.set_column(i * r + j, *coords);
        }
    }
    return im;
}

ConfigHomologyReport config_homology(const Graph& g, const IntersectionMatrix& im,
                                     const HomologySummary* oracle) {
    GraphClassification c = validate(g);
    if (!c.connected || c.circle_like)
        throw HypothesisViolated(
            "configuration homology requires a connected graph not homeomorphic to the circle");

    const std::size_t r = im.basis.size();
    ConfigHomologyReport report;

    IntMatrix kernel = kernel_basis(im.h2_coordinates);
    report.b2 = kernel.cols();
    for (std::size_t k = 0; k < kernel.cols(); ++k) {
        IntMatrix tensor(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) tensor(i, j) = kernel(i * r + j, k);
        report.h2_generators.push_back(std::move(tensor));
    }

    // The cokernel is taken inside the kernel lattice of the relative
    // boundary (h2_coordinates lives there), not in the ambient chain
    // group; this is what makes the torsion correct.
    CokernelInvariants coker = cokernel_invariants(im.h2_coordinates);
    report.coker_free_rank = coker.free_rank;
    report.coker_torsion = coker.torsion;
    report.b1_decomposition = {coker.free_rank, 2 * static_cast<std::size_t>(c.first_betti)};
    report.b1 = report.b1_decomposition.first + report.b1_decomposition.second;

    if (oracle) {
        report.oracle_checked = true;
        report.oracle_agreement =
            oracle->betti.size() >= 3 && oracle->betti[1] == report.b1 &&
            oracle->betti[2] == report.b2 && oracle->torsion[1] == report.coker_torsion;
    }
    return report;
}

}  // namespace graphconf
