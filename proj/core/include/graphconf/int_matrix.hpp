#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include <gmpxx.h>

namespace graphconf {

/// Dense matrix of arbitrary-precision integers, stored row-major.
///
/// Every homology computation in this library bottoms out in exact
/// integer linear algebra on these matrices. Entries are GMP integers:
/// Smith reduction can grow intermediate entries well past machine
/// words even for small boundary matrices.
class IntMatrix {
 public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    mpz_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const mpz_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const;
    bool is_zero() const;

    std::vector<mpz_class> row(std::size_t i) const;
    std::vector<mpz_class> column(std::size_t j) const;
    void set_column(std::size_t j, const std::vector<mpz_class>& v);

    /// Matrix-vector product A·v; v.size() must equal cols().
    std::vector<mpz_class> apply(const std::vector<mpz_class>& v) const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);

    /// row[dst] -= q * row[src], starting at column `from`.
    void row_submul(std::size_t dst, std::size_t src, const mpz_class& q, std::size_t from = 0);
    /// col[dst] -= q * col[src], starting at row `from`.
    void col_submul(std::size_t dst, std::size_t src, const mpz_class& q, std::size_t from = 0);
    /// row[dst] += row[src].
    void row_add(std::size_t dst, std::size_t src);

 private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> data_;
};

}  // namespace graphconf
