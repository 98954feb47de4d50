#include "graphconf/smith.hpp"

#include <stdexcept>

namespace graphconf {

namespace {

// In-place Smith reduction of `a`. The transforms are accumulated only
// when requested; rank/torsion queries skip them entirely.
struct Reduction {
    IntMatrix a;
    IntMatrix left;
    IntMatrix right;
    bool with_left = false;
    bool with_right = false;
    std::size_t pivots = 0;  // number of diagonal entries placed (incl. trailing zeros? no: nonzero ones)

    void run();

 private:
    // Smallest-|value| nonzero entry of the submatrix a[t.., t..];
    // ties resolved by smallest row, then column.
    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        mpz_class best;
        const std::size_t m = a.rows(), n = a.cols();
        for (std::size_t i = t; i < m; ++i) {
            for (std::size_t j = t; j < n; ++j) {
                const mpz_class& v = a(i, j);
                if (sgn(v) == 0) continue;
                mpz_class av = abs(v);
                if (!found || av < best) {
                    found = true;
                    best = av;
                    pi = i;
                    pj = j;
                    if (best == 1) return true;  // cannot improve
                }
            }
        }
        return found;
    }

    bool cross_clean(std::size_t t) const {
        const std::size_t m = a.rows(), n = a.cols();
        for (std::size_t i = t + 1; i < m; ++i)
            if (sgn(a(i, t)) != 0) return false;
        for (std::size_t j = t + 1; j < n; ++j)
            if (sgn(a(t, j)) != 0) return false;
        return true;
    }

    bool find_nondivisible(std::size_t t, std::size_t& ri) const {
        const std::size_t m = a.rows(), n = a.cols();
        const mpz_class& d = a(t, t);
        for (std::size_t i = t + 1; i < m; ++i)
            for (std::size_t j = t + 1; j < n; ++j)
                if (!mpz_divisible_p(a(i, j).get_mpz_t(), d.get_mpz_t())) {
                    ri = i;
                    return true;
                }
        return false;
    }
};

void Reduction::run() {
    const std::size_t m = a.rows(), n = a.cols();
    if (with_left) left = IntMatrix::identity(m);
    if (with_right) right = IntMatrix::identity(n);
    const std::size_t steps = std::min(m, n);

    mpz_class q;
    for (std::size_t t = 0; t < steps; ++t) {
        std::size_t pi = t, pj = t;
        if (!find_pivot(t, pi, pj)) break;  // submatrix is zero: trailing zeros
        for (;;) {
            a.swap_rows(t, pi);
            if (with_left) left.swap_rows(t, pi);
            a.swap_cols(t, pj);
            if (with_right) right.swap_cols(t, pj);

            // Clear the cross. Truncated division leaves remainders of
            // absolute value strictly below the pivot; those become the
            // next, smaller pivot, so the loop terminates.
            const mpz_class pivot = a(t, t);
            for (std::size_t i = t + 1; i < m; ++i) {
                const mpz_class& v = a(i, t);
                if (sgn(v) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), v.get_mpz_t(), pivot.get_mpz_t());
                if (sgn(q) != 0) {
                    a.row_submul(i, t, q, t);
                    if (with_left) left.row_submul(i, t, q, 0);
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                const mpz_class& v = a(t, j);
                if (sgn(v) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), v.get_mpz_t(), pivot.get_mpz_t());
                if (sgn(q) != 0) {
                    a.col_submul(j, t, q, t);
                    if (with_right) right.col_submul(j, t, q, 0);
                }
            }

            if (cross_clean(t)) {
                std::size_t ri = 0;
                if (find_nondivisible(t, ri)) {
                    // Pull a non-divisible row into the pivot row and keep
                    // reducing; this enforces d_t | d_{t+1}.
                    a.row_add(t, ri);
                    if (with_left) left.row_add(t, ri);
                    if (!find_pivot(t, pi, pj)) break;
                    continue;
                }
                break;
            }
            if (!find_pivot(t, pi, pj)) break;
        }
        if (sgn(a(t, t)) < 0) {
            a.negate_row(t);
            if (with_left) left.negate_row(t);
        }
        if (sgn(a(t, t)) != 0) ++pivots;
    }
}

Reduction reduce(const IntMatrix& a, bool with_left, bool with_right) {
    Reduction r;
    r.a = a;
    r.with_left = with_left;
    r.with_right = with_right;
    r.run();
    return r;
}

}  // namespace

std::vector<mpz_class> SmithDecomposition::diagonal() const {
    const std::size_t k = std::min(original_rows, original_cols);
    std::vector<mpz_class> d(k);
    for (std::size_t i = 0; i < k; ++i) d[i] = diag(i, i);
    return d;
}

std::size_t SmithDecomposition::rank() const {
    std::size_t r = 0;
    const std::size_t k = std::min(original_rows, original_cols);
    for (std::size_t i = 0; i < k; ++i)
        if (sgn(diag(i, i)) != 0) ++r;
    return r;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    Reduction r = reduce(a, true, true);
    SmithDecomposition out;
    out.left = std::move(r.left);
    out.diag = std::move(r.a);
    out.right = std::move(r.right);
    out.original_rows = a.rows();
    out.original_cols = a.cols();
    return out;
}

std::size_t rank(const IntMatrix& a) {
    Reduction r = reduce(a, false, false);
    return r.pivots;
}

std::vector<mpz_class> invariant_factors(const IntMatrix& a) {
    Reduction r = reduce(a, false, false);
    std::vector<mpz_class> out;
    out.reserve(r.pivots);
    for (std::size_t i = 0; i < r.pivots; ++i) out.push_back(r.a(i, i));
    return out;
}

IntMatrix kernel_basis(const IntMatrix& a) {
    Reduction r = reduce(a, false, true);
    const std::size_t n = a.cols();
    const std::size_t rk = r.pivots;
    IntMatrix basis(n, n - rk);
    for (std::size_t j = rk; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) basis(i, j - rk) = r.right(i, j);
    return basis;
}

CokernelInvariants cokernel_invariants(const IntMatrix& a) {
    Reduction r = reduce(a, false, false);
    CokernelInvariants out;
    out.free_rank = a.rows() - r.pivots;
    for (std::size_t i = 0; i < r.pivots; ++i)
        if (r.a(i, i) > 1) out.torsion.push_back(r.a(i, i));
    return out;
}

LatticeSolver::LatticeSolver(const IntMatrix& a) : snf_(smith_normal_form(a)) {}

std::optional<std::vector<mpz_class>> LatticeSolver::solve(const std::vector<mpz_class>& rhs) const {
    const std::size_t m = snf_.original_rows;
    const std::size_t n = snf_.original_cols;
    if (rhs.size() != m) throw std::invalid_argument("rhs size mismatch");

    std::vector<mpz_class> y = snf_.left.apply(rhs);
    std::vector<mpz_class> u(n);
    const std::size_t k = std::min(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        if (i < k && sgn(snf_.diag(i, i)) != 0) {
            if (!mpz_divisible_p(y[i].get_mpz_t(), snf_.diag(i, i).get_mpz_t()))
                return std::nullopt;
            mpz_divexact(u[i].get_mpz_t(), y[i].get_mpz_t(), snf_.diag(i, i).get_mpz_t());
        } else if (sgn(y[i]) != 0) {
            return std::nullopt;
        }
    }
    return snf_.right.apply(u);
}

HomologySummary chain_homology(const std::vector<std::size_t>& cells,
                               const std::vector<const IntMatrix*>& boundaries) {
    if (boundaries.size() + 1 != cells.size())
        throw std::invalid_argument("need one boundary matrix per consecutive degree pair");
    const std::size_t top = cells.size() - 1;

    std::vector<std::size_t> ranks(boundaries.size());
    std::vector<std::vector<mpz_class>> factors(boundaries.size());
    for (std::size_t k = 0; k < boundaries.size(); ++k) {
        const IntMatrix& b = *boundaries[k];
        if (b.rows() != cells[k] || b.cols() != cells[k + 1])
            throw std::invalid_argument("boundary matrix shape mismatch");
        factors[k] = invariant_factors(b);
        ranks[k] = factors[k].size();
    }

    HomologySummary out;
    out.betti.resize(top + 1);
    out.torsion.resize(top + 1);
    for (std::size_t k = 0; k <= top; ++k) {
        std::size_t r_out = (k > 0) ? ranks[k - 1] : 0;     // rank of d_k
        std::size_t r_in = (k < top) ? ranks[k] : 0;        // rank of d_{k+1}
        out.betti[k] = cells[k] - r_out - r_in;
        if (k < top)
            for (const auto& f : factors[k])
                if (f > 1) out.torsion[k].push_back(f);
    }
    return out;
}

}  // namespace graphconf
