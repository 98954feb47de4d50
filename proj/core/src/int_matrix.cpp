#include "graphconf/int_matrix.hpp"

#include <stdexcept>

namespace graphconf {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.resize(rows_ * cols_);
    std::size_t i = 0;
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged initializer");
        std::size_t j = 0;
        for (long v : r) data_[i * cols_ + j++] = v;
        ++i;
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("dimension mismatch in product");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpz_class& a = (*this)(i, k);
            if (sgn(a) == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const mpz_class& b = rhs(k, j);
                if (sgn(b) != 0)
                    mpz_addmul(out(i, j).get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            }
        }
    }
    return out;
}

bool IntMatrix::operator==(const IntMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

bool IntMatrix::is_zero() const {
    for (const auto& v : data_)
        if (sgn(v) != 0) return false;
    return true;
}

std::vector<mpz_class> IntMatrix::row(std::size_t i) const {
    return std::vector<mpz_class>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

std::vector<mpz_class> IntMatrix::column(std::size_t j) const {
    std::vector<mpz_class> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
}

void IntMatrix::set_column(std::size_t j, const std::vector<mpz_class>& v) {
    if (v.size() != rows_) throw std::invalid_argument("column size mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

std::vector<mpz_class> IntMatrix::apply(const std::vector<mpz_class>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector size mismatch");
    std::vector<mpz_class> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            const mpz_class& a = (*this)(i, j);
            if (sgn(a) != 0 && sgn(v[j]) != 0)
                mpz_addmul(out[i].get_mpz_t(), a.get_mpz_t(), v[j].get_mpz_t());
        }
    }
    return out;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c)
        mpz_swap(data_[i * cols_ + c].get_mpz_t(), data_[j * cols_ + c].get_mpz_t());
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r)
        mpz_swap(data_[r * cols_ + i].get_mpz_t(), data_[r * cols_ + j].get_mpz_t());
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) {
        mpz_class& v = data_[i * cols_ + c];
        mpz_neg(v.get_mpz_t(), v.get_mpz_t());
    }
}

void IntMatrix::row_submul(std::size_t dst, std::size_t src, const mpz_class& q, std::size_t from) {
    if (sgn(q) == 0) return;
    for (std::size_t c = from; c < cols_; ++c) {
        const mpz_class& s = data_[src * cols_ + c];
        if (sgn(s) != 0)
            mpz_submul(data_[dst * cols_ + c].get_mpz_t(), q.get_mpz_t(), s.get_mpz_t());
    }
}

void IntMatrix::col_submul(std::size_t dst, std::size_t src, const mpz_class& q, std::size_t from) {
    if (sgn(q) == 0) return;
    for (std::size_t r = from; r < rows_; ++r) {
        const mpz_class& s = data_[r * cols_ + src];
        if (sgn(s) != 0)
            mpz_submul(data_[r * cols_ + dst].get_mpz_t(), q.get_mpz_t(), s.get_mpz_t());
    }
}

void IntMatrix::row_add(std::size_t dst, std::size_t src) {
    for (std::size_t c = 0; c < cols_; ++c) {
        const mpz_class& s = data_[src * cols_ + c];
        if (sgn(s) != 0) data_[dst * cols_ + c] += s;
    }
}

}  // namespace graphconf
