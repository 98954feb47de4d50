#include "graphconf/cup_product.hpp"

#include <algorithm>
#include <limits>

namespace graphconf {

namespace {

// Value of a functional on z_k; index 0 means z_0 = z_1 + ... + z_r.
Rational value_on_face(const RationalVec& functional, std::size_t k) {
    if (k == 0) {
        Rational sum = 0;
        for (const Rational& v : functional) sum += v;
        return sum;
    }
    return functional[k - 1];
}

constexpr std::size_t kNoPivot = std::numeric_limits<std::size_t>::max();

// Exact rational solve of A x = rhs, A given by columns. Produces the
// particular solution supported on the pivot columns of a left-to-right
// reduced row echelon form; returns false when inconsistent.
bool solve_rational(const std::vector<RationalVec>& columns, const RationalVec& rhs,
                    RationalVec& out) {
    const std::size_t n = columns.size();
    const std::size_t m = rhs.size();
    std::vector<RationalVec> aug(m, RationalVec(n + 1, Rational(0)));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) aug[i][j] = columns[j][i];
    for (std::size_t i = 0; i < m; ++i) aug[i][n] = rhs[i];

    std::vector<std::size_t> pivot_of_col(n, kNoPivot);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t sel = row;
        while (sel < m && sgn(aug[sel][col]) == 0) ++sel;
        if (sel == m) continue;
        std::swap(aug[sel], aug[row]);
        Rational inv = 1 / aug[row][col];
        for (std::size_t j = col; j <= n; ++j) aug[row][j] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row) continue;
            Rational f = aug[i][col];
            if (sgn(f) == 0) continue;
            for (std::size_t j = col; j <= n; ++j) aug[i][j] -= f * aug[row][j];
        }
        pivot_of_col[col] = row;
        ++row;
    }
    for (std::size_t i = row; i < m; ++i)
        if (sgn(aug[i][n]) != 0) return false;
    out.assign(n, Rational(0));
    for (std::size_t col = 0; col < n; ++col)
        if (pivot_of_col[col] != kNoPivot) out[col] = aug[pivot_of_col[col]][n];
    return true;
}

std::pair<RationalVec, RationalVec> functional_parts(const H1Label& l, std::size_t r) {
    std::pair<RationalVec, RationalVec> parts{RationalVec(r, Rational(0)),
                                              RationalVec(r, Rational(0))};
    if (l.kind == H1Label::Xi) parts.first[l.index - 1] = 1;
    if (l.kind == H1Label::Eta) parts.second[l.index - 1] = 1;
    // The special class has no pulled-back part.
    return parts;
}

}  // namespace

RationalVec cup_pullback(const RationalVec& xi_plus, const RationalVec& xi_minus,
                         const RationalVec& eta_plus, const RationalVec& eta_minus,
                         const PlanarStructure& ps, const DisjointPairSet& pairs) {
    const std::size_t r = ps.bounded_count();
    if (xi_plus.size() != r || xi_minus.size() != r || eta_plus.size() != r ||
        eta_minus.size() != r)
        throw Error("functionals must give values on the bounded face cycles");

    RationalVec out(pairs.pairs.size(), Rational(0));
    for (std::size_t k = 0; k < pairs.pairs.size(); ++k) {
        auto [i, j] = pairs.pairs[k];
        out[k] = value_on_face(eta_plus, i) * value_on_face(xi_minus, j) -
                 value_on_face(xi_plus, i) * value_on_face(eta_minus, j);
    }
    return out;
}

ProductTable basis_products(const PlanarStructure& ps, const DisjointPairSet& pairs) {
    const std::size_t r = ps.bounded_count();
    ProductTable table;
    table.h2_basis = pairs.pairs;

    for (std::size_t i = 1; i <= r; ++i) table.h1_labels.push_back({H1Label::Xi, i});
    for (std::size_t i = 1; i <= r; ++i) table.h1_labels.push_back({H1Label::Eta, i});
    table.h1_labels.push_back({H1Label::Special, 0});

    for (const H1Label& a : table.h1_labels) {
        for (const H1Label& b : table.h1_labels) {
            auto [ap, am] = functional_parts(a, r);
            auto [bp, bm] = functional_parts(b, r);
            table.entries[{a, b}] = cup_pullback(ap, am, bp, bm, ps, pairs);
        }
    }
    return table;
}

bool verify_on_tori(const ProductTable& table, const PlanarStructure& ps,
                    const DisjointPairSet& pairs) {
    const std::size_t r = ps.bounded_count();
    for (const auto& [key, stored] : table.entries) {
        auto [ap, am] = functional_parts(key.first, r);
        auto [bp, bm] = functional_parts(key.second, r);
        for (std::size_t k = 0; k < pairs.pairs.size(); ++k) {
            auto [i, j] = pairs.pairs[k];
            // <a cup b, [T_ij]> through the pairing with z_i x z_j.
            Rational expected = -value_on_face(ap, i) * value_on_face(bm, j) +
                                value_on_face(bp, i) * value_on_face(am, j);
            if (stored[k] != expected) return false;
        }
    }
    return true;
}

CohomologyBases build_cohomology_bases(const Graph& g, const PlanarStructure& ps,
                                       const DisjointPairSet& pairs, const H1Generators& gens,
                                       const DiscreteConfigComplex& complex) {
    EmbeddingRegularity reg = check_embedding_regularity(ps, g);
    if (!reg.all()) throw HypothesisViolated("dual bases require a regular embedding");

    const std::size_t r = ps.bounded_count();
    CohomologyBases bases;
    bases.r = r;
    bases.h2_labels = pairs.pairs;
    for (std::size_t i = 1; i <= r; ++i) bases.h1_labels.push_back({H1Label::Xi, i});
    for (std::size_t i = 1; i <= r; ++i) bases.h1_labels.push_back({H1Label::Eta, i});
    bases.h1_labels.push_back({H1Label::Special, 0});

    // Dual cochains u_i on the edges of Gamma with u_i(z_j) = delta_ij:
    // solve Z^T w = e_i where the columns of Z^T list the face-cycle
    // coefficients of each edge. The solve picks a deterministic support
    // (the first independent edges in id order).
    std::vector<RationalVec> edge_columns;
    edge_columns.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        RationalVec col(r, Rational(0));
        for (std::size_t i = 0; i < r; ++i) {
            auto it = ps.face_cycles[i + 1].find(e.id);
            if (it != ps.face_cycles[i + 1].end()) col[i] = Rational(it->second);
        }
        edge_columns.push_back(std::move(col));
    }
    for (std::size_t i = 0; i < r; ++i) {
        RationalVec target(r, Rational(0));
        target[i] = 1;
        RationalVec weights;
        if (!solve_rational(edge_columns, target, weights))
            throw SolveFailure("face cycles do not span the cycle space");
        std::map<EdgeId, Rational> cochain;
        for (std::size_t k = 0; k < weights.size(); ++k)
            if (sgn(weights[k]) != 0) cochain[g.edges()[k].id] = weights[k];
        bases.u_cochains.push_back(std::move(cochain));
    }

    // Evaluation matrix against the generator cycles. The special class
    // is the dual vector of the last generator: zero on the first 2r
    // cycles and +1 on the triple cycle.
    const std::size_t total = 2 * r + 1;
    if (gens.cycles.size() != total) throw SolveFailure("unexpected generator count");
    bases.pairing.assign(total, RationalVec(total, Rational(0)));
    for (std::size_t row = 0; row < 2 * r; ++row)
        for (std::size_t col = 0; col < total; ++col)
            bases.pairing[row][col] =
                evaluate_h1_class(bases, bases.h1_labels[row], gens.cycles[col], gens, complex);
    bases.pairing[2 * r][2 * r] = 1;

    return bases;
}

Rational evaluate_h1_class(const CohomologyBases& bases, const H1Label& label,
                           const std::vector<mpz_class>& cycle, const H1Generators& gens,
                           const DiscreteConfigComplex& complex) {
    if (label.kind != H1Label::Special) {
        // (u_i x 1) evaluates on horizontal cells, (1 x u_i) on vertical.
        const auto& cochain = bases.u_cochains[label.index - 1];
        const bool vertical = (label.kind == H1Label::Eta);
        Rational value = 0;
        for (std::size_t c = 0; c < cycle.size(); ++c) {
            if (sgn(cycle[c]) == 0) continue;
            const Cell1& cell = complex.cells1[c];
            if (cell.vertical != vertical) continue;
            auto it = cochain.find(cell.edge);
            if (it != cochain.end()) value += Rational(cycle[c]) * it->second;
        }
        return value;
    }

    // Special: coordinates of the class in the generator basis; the value
    // is the coefficient of the triple cycle. Solve [G | d2] x = cycle.
    const std::size_t m = cycle.size();
    std::vector<RationalVec> columns;
    columns.reserve(gens.cycles.size() + complex.cells2.size());
    for (const auto& gcol : gens.cycles) {
        RationalVec col(m);
        for (std::size_t i = 0; i < m; ++i) col[i] = Rational(gcol[i]);
        columns.push_back(std::move(col));
    }
    for (std::size_t j = 0; j < complex.cells2.size(); ++j) {
        RationalVec col(m);
        for (std::size_t i = 0; i < m; ++i) col[i] = Rational(complex.boundary2(i, j));
        columns.push_back(std::move(col));
    }
    RationalVec rhs(m);
    for (std::size_t i = 0; i < m; ++i) rhs[i] = Rational(cycle[i]);
    RationalVec solution;
    if (!solve_rational(columns, rhs, solution))
        throw SolveFailure("chain is not a cycle of the configuration complex");
    return solution[gens.cycles.size() - 1];
}

}  // namespace graphconf
