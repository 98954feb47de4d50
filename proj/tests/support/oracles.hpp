#pragma once

// Test-side oracles, independent of the library's Smith reduction path.

#include <vector>

#include <gmpxx.h>

#include "graphconf/int_matrix.hpp"

namespace testsupport {

/// Rank over Q by fraction-free (Bareiss) elimination.
inline std::size_t bareiss_rank(const graphconf::IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    std::vector<std::vector<mpz_class>> w(m, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) w[i][j] = a(i, j);

    mpz_class prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t sel = row;
        while (sel < m && sgn(w[sel][col]) == 0) ++sel;
        if (sel == m) continue;
        std::swap(w[sel], w[row]);
        for (std::size_t i = row + 1; i < m; ++i) {
            for (std::size_t j = col + 1; j < n; ++j) {
                w[i][j] = (w[row][col] * w[i][j] - w[i][col] * w[row][j]) / prev;
            }
            w[i][col] = 0;
        }
        prev = w[row][col];
        ++row;
    }
    return row;
}

/// Determinant by Bareiss elimination; square matrices only.
inline mpz_class bareiss_determinant(const graphconf::IntMatrix& a) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("determinant needs a square matrix");
    if (n == 0) return 1;
    std::vector<std::vector<mpz_class>> w(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w[i][j] = a(i, j);

    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(w[k][k]) == 0) {
            std::size_t sel = k + 1;
            while (sel < n && sgn(w[sel][k]) == 0) ++sel;
            if (sel == n) return 0;
            std::swap(w[sel], w[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                w[i][j] = (w[k][k] * w[i][j] - w[i][k] * w[k][j]) / prev;
            w[i][k] = 0;
        }
        prev = w[k][k];
    }
    return sign * w[n - 1][n - 1];
}

/// Invariant factors by plain gcd-driven row/column reduction, no
/// minimal-pivot rule; a second route to the Smith diagonal.
inline std::vector<mpz_class> naive_invariant_factors(const graphconf::IntMatrix& a) {
    std::size_t m = a.rows(), n = a.cols();
    std::vector<std::vector<mpz_class>> w(m, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) w[i][j] = a(i, j);

    std::vector<mpz_class> factors;
    std::size_t t = 0;
    while (t < m && t < n) {
        // Find any nonzero entry.
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < m && !found; ++i)
            for (std::size_t j = t; j < n && !found; ++j)
                if (sgn(w[i][j]) != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        std::swap(w[t], w[pi]);
        for (std::size_t i = 0; i < m; ++i) std::swap(w[i][t], w[i][pj]);

        bool again = true;
        while (again) {
            again = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                while (sgn(w[i][t]) != 0) {
                    mpz_class q = w[t][t] == 0 ? 0 : mpz_class(w[i][t] / w[t][t]);
                    for (std::size_t j = t; j < n; ++j) w[i][j] -= q * w[t][j];
                    if (sgn(w[i][t]) != 0) {
                        std::swap(w[t], w[i]);
                        again = true;
                    }
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                while (sgn(w[t][j]) != 0) {
                    mpz_class q = w[t][t] == 0 ? 0 : mpz_class(w[t][j] / w[t][t]);
                    for (std::size_t i = t; i < m; ++i) w[i][j] -= q * w[i][t];
                    if (sgn(w[t][j]) != 0) {
                        for (std::size_t i = 0; i < m; ++i) std::swap(w[i][t], w[i][j]);
                        again = true;
                    }
                }
            }
        }
        factors.push_back(abs(w[t][t]));
        ++t;
    }

    // Enforce the divisibility chain by pairwise gcd/lcm exchanges.
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j) {
            if (sgn(factors[i]) == 0 && sgn(factors[j]) != 0) std::swap(factors[i], factors[j]);
            if (sgn(factors[j]) == 0) continue;
            mpz_class g, l;
            mpz_gcd(g.get_mpz_t(), factors[i].get_mpz_t(), factors[j].get_mpz_t());
            if (sgn(g) == 0) continue;
            l = factors[i] / g * factors[j];
            factors[i] = g;
            factors[j] = l;
        }
    // Trim zeros (they are not invariant factors).
    while (!factors.empty() && sgn(factors.back()) == 0) factors.pop_back();
    return factors;
}

}  // namespace testsupport
