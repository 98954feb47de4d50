#pragma once

#include <utility>
#include <vector>

#include "graphconf/graph.hpp"
#include "graphconf/relative_complex.hpp"
#include "graphconf/smith.hpp"

namespace graphconf {

using CycleBasis = std::vector<EdgeChain>;

/// Intersection of two cycles as a relative 2-chain: the coefficient of
/// the cell (e, e') is n_e * m_{e'}, summed over ordered pairs of edges
/// sharing a vertex (n, m the chain coefficients of z, z'). The result is
/// annihilated by the relative boundary, i.e. lands in H_2(N, dN).
std::vector<mpz_class> intersection_tensor(const Graph& g, const EdgeChain& z,
                                           const EdgeChain& zp, const RelativeComplex& complex);

/// Scalar component I_{ee'}(z (x) z') = n_e * m_{e'}; the (e, e')
/// coordinate of the full intersection chain. The edges must share a
/// vertex (or coincide).
mpz_class scalar_form(const Graph& g, const EdgeId& e, const EdgeId& ep, const EdgeChain& z,
                      const EdgeChain& zp);

/// The intersection form on a chosen basis z_1..z_r of H_1(Gamma).
/// Column (i, j) (at index i*r + j) is the chain of z_i (x) z_j;
/// h2_coordinates re-expresses each column in the kernel basis of
/// H_2(N, dN), which must succeed exactly.
struct IntersectionMatrix {
    CycleBasis basis;
    IntMatrix matrix;           // cells2 x r^2
    IntMatrix h2_coordinates;   // rank H_2(N, dN) x r^2
};

IntersectionMatrix build_intersection_matrix(const Graph& g, const CycleBasis& basis,
                                             const RelativeComplex& complex,
                                             const RelativeH2& h2);

/// Homology of the configuration space assembled from the intersection
/// form: H_2 is its kernel, H_1 is coker (x) H_1(Gamma)^2.
struct ConfigHomologyReport {
    std::size_t b2 = 0;
    std::vector<IntMatrix> h2_generators;  // kernel vectors reshaped to r x r tensors
    std::size_t b1 = 0;
    std::size_t coker_free_rank = 0;
    std::vector<mpz_class> coker_torsion;
    std::pair<std::size_t, std::size_t> b1_decomposition;  // (coker free rank, 2 b_1(Gamma))
    bool oracle_checked = false;
    bool oracle_agreement = false;
};

ConfigHomologyReport config_homology(const Graph& g, const IntersectionMatrix& im,
                                     const HomologySummary* oracle = nullptr);

}  // namespace graphconf
