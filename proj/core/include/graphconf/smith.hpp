#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "graphconf/int_matrix.hpp"

namespace graphconf {

/// Smith normal form left · A · right = diag.
///
/// left and right are unimodular; the diagonal entries are non-negative,
/// each divides the next, and zero entries trail the nonzero ones.
struct SmithDecomposition {
    IntMatrix left;    // rows x rows
    IntMatrix diag;    // rows x cols, nonzero only on the principal diagonal
    IntMatrix right;   // cols x cols
    std::size_t original_rows = 0;
    std::size_t original_cols = 0;

    /// Principal diagonal of diag, length min(rows, cols).
    std::vector<mpz_class> diagonal() const;
    std::size_t rank() const;
};

/// Full Smith decomposition. Deterministic: pivots are chosen as the
/// nonzero entry of minimal absolute value, ties broken by smallest row
/// then column index.
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Rank of an integer matrix = number of nonzero Smith diagonal entries.
/// Does not accumulate the transforms, so it is much cheaper than
/// smith_normal_form on large inputs.
std::size_t rank(const IntMatrix& a);

/// Invariant factors (the nonzero Smith diagonal), cheapest path.
std::vector<mpz_class> invariant_factors(const IntMatrix& a);

/// Basis of the integer kernel {x : A·x = 0}, returned as the columns of
/// a cols x k matrix. The columns extend to a basis of the whole ambient
/// lattice, so the sublattice they span is saturated: every integer
/// kernel vector is an integer combination of the columns.
IntMatrix kernel_basis(const IntMatrix& a);

struct CokernelInvariants {
    std::size_t free_rank = 0;
    std::vector<mpz_class> torsion;  // invariant factors > 1, in divisibility order
};

/// Invariants of coker(A) = Z^rows / A·Z^cols.
CokernelInvariants cokernel_invariants(const IntMatrix& a);

/// Exact solver for A·x = b over the integers. One Smith decomposition
/// of A is reused across right-hand sides.
class LatticeSolver {
 public:
    explicit LatticeSolver(const IntMatrix& a);

    /// Returns an integer solution of A·x = rhs, or nullopt if none exists.
    std::optional<std::vector<mpz_class>> solve(const std::vector<mpz_class>& rhs) const;

 private:
    SmithDecomposition snf_;
};

/// Betti numbers and torsion invariant factors of a chain complex, per degree.
struct HomologySummary {
    std::vector<std::size_t> betti;
    std::vector<std::vector<mpz_class>> torsion;  // factors > 1 in each degree
};

/// Homology of a finite chain complex. cells[k] is the number of k-cells;
/// boundaries[k] is the matrix of d_{k+1} : C_{k+1} -> C_k, with shape
/// cells[k] x cells[k+1].
HomologySummary chain_homology(const std::vector<std::size_t>& cells,
                               const std::vector<const IntMatrix*>& boundaries);

}  // namespace graphconf
