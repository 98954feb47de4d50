#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "graphconf/discrete_config.hpp"
#include "graphconf/graph.hpp"
#include "graphconf/planar.hpp"

namespace graphconf {

using Rational = mpq_class;
using RationalVec = std::vector<Rational>;

/// Label of a degree-one cohomology basis class of the configuration
/// space: xi_i pulls back the dual face class u_i through the first
/// particle, eta_i through the second, and Special is the class that
/// vanishes on all one-particle-stationary cycles.
struct H1Label {
    enum Kind { Xi, Eta, Special } kind = Xi;
    std::size_t index = 0;  // 1..r for Xi/Eta, unused for Special

    bool operator<(const H1Label& o) const {
        if (kind != o.kind) return kind < o.kind;
        return index < o.index;
    }
    bool operator==(const H1Label& o) const { return kind == o.kind && index == o.index; }

    std::string name() const {
        switch (kind) {
            case Xi: return "xi_" + std::to_string(index);
            case Eta: return "eta_" + std::to_string(index);
            default: return "special";
        }
    }
};

/// Cup product of two pulled-back degree-one classes, expressed over the
/// dual torus basis indexed by the disjoint face pairs. The functionals
/// are given by their values on the bounded face cycles z_1..z_r and
/// extend to z_0 by z_0 = z_1 + ... + z_r. The coefficient of the (i, j)
/// entry is <eta+, z_i><xi-, z_j> - <xi+, z_i><eta-, z_j>.
RationalVec cup_pullback(const RationalVec& xi_plus, const RationalVec& xi_minus,
                         const RationalVec& eta_plus, const RationalVec& eta_minus,
                         const PlanarStructure& ps, const DisjointPairSet& pairs);

/// Structure constants of the degree-one cup products over the basis
/// {xi_1..xi_r, eta_1..eta_r, special}.
struct ProductTable {
    std::vector<std::pair<std::size_t, std::size_t>> h2_basis;  // the disjoint pairs
    std::vector<H1Label> h1_labels;
    std::map<std::pair<H1Label, H1Label>, RationalVec> entries;

    const RationalVec& at(const H1Label& a, const H1Label& b) const { return entries.at({a, b}); }
};

/// The full product table: xi-xi and eta-eta products vanish, xi_i cup
/// eta_j has the three-term epsilon expansion over the disjoint pairs,
/// every product involving the special class vanishes, and the table is
/// antisymmetric under swapping the factors. Requires a connected planar
/// input; the closed-form entries are valid for any such embedding.
ProductTable basis_products(const PlanarStructure& ps, const DisjointPairSet& pairs);

/// Independent consistency check: every table entry, evaluated against
/// each torus class through the pairing with z_i x z_j, must reproduce
/// the stored coefficient.
bool verify_on_tori(const ProductTable& table, const PlanarStructure& ps,
                    const DisjointPairSet& pairs);

/// Dual degree-one cohomology bases for a regular embedding. u_cochains
/// holds the integer cochains on Gamma dual to the bounded face cycles;
/// pairing is the (2r+1) x (2r+1) evaluation matrix of the basis classes
/// against the generator cycles (rows xi_1..xi_r, eta_1..eta_r, special).
struct CohomologyBases {
    std::size_t r = 0;
    std::vector<std::pair<std::size_t, std::size_t>> h2_labels;
    std::vector<H1Label> h1_labels;
    std::vector<std::map<EdgeId, Rational>> u_cochains;
    std::vector<RationalVec> pairing;
};

/// Build the bases. Throws HypothesisViolated unless the embedding
/// regularity checks pass (the dual-basis construction needs them).
CohomologyBases build_cohomology_bases(const Graph& g, const PlanarStructure& ps,
                                       const DisjointPairSet& pairs, const H1Generators& gens,
                                       const DiscreteConfigComplex& complex);

/// Evaluate a basis class on a 1-cycle of D(Gamma, 2) (chain in 1-cell
/// coordinates). Pulled-back classes evaluate by their cochains; the
/// special class evaluates through the class coordinates in the
/// generator basis, obtained by an exact rational solve.
Rational evaluate_h1_class(const CohomologyBases& bases, const H1Label& label,
                           const std::vector<mpz_class>& cycle, const H1Generators& gens,
                           const DiscreteConfigComplex& complex);

}  // namespace graphconf
