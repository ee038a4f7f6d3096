#pragma once

#include <optional>
#include <vector>

#include "isoform/errors.hpp"

namespace isoform {

// Dense matrix over an exact field. F needs +, -, *, inverse(), is_zero(),
// a zero default constructor and value semantics. Used with Cyclotomic and
// Rational; elimination pivots on the first nonzero entry so results are
// deterministic (no magnitude pivoting exists for these fields).
template <typename F>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, F fill = F())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n, const F& one) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw domain_error("matrix shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const F& bkj = b(k, j);
                    if (!bkj.is_zero()) out(i, j) = out(i, j) + aik * bkj;
                }
            }
        return out;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw domain_error("matrix shape mismatch");
        Matrix out = a;
        for (std::size_t i = 0; i < out.data_.size(); ++i)
            out.data_[i] = out.data_[i] + b.data_[i];
        return out;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw domain_error("matrix shape mismatch");
        Matrix out = a;
        for (std::size_t i = 0; i < out.data_.size(); ++i)
            out.data_[i] = out.data_[i] - b.data_[i];
        return out;
    }

    friend Matrix operator*(const Matrix& a, const F& s) {
        Matrix out = a;
        for (auto& v : out.data_) v = v * s;
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            if (!(a.data_[i] == b.data_[i])) return false;
        return true;
    }

    Matrix transposed() const {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

private:
    std::size_t rows_, cols_;
    std::vector<F> data_;
};

// In-place reduced row echelon form. Returns the pivot columns in order.
template <typename F>
std::vector<std::size_t> rref(Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pr = row;
        while (pr < m.rows() && m(pr, col).is_zero()) ++pr;
        if (pr == m.rows()) continue;
        if (pr != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pr, j), m(row, j));
        const F inv = m(row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const F factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) = m(i, j) - factor * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <typename F>
std::size_t rank(Matrix<F> m) {
    return rref(m).size();
}

// Basis of the right nullspace, one column vector per free column. The basis
// is the standard one read off the reduced echelon form, hence deterministic.
template <typename F>
std::vector<std::vector<F>> nullspace(Matrix<F> m, const F& one) {
    const std::size_t n = m.cols();
    std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(n, F());
        v[free] = one;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = F() - m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// One solution of A x = b (free variables set to zero), or nothing if the
// system is inconsistent.
template <typename F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b) {
    if (a.rows() != b.size()) throw domain_error("matrix shape mismatch");
    Matrix<F> aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    std::vector<std::size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<F> x(a.cols(), F());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
    return x;
}

// Solves A X = B columnwise; nullopt if any column is inconsistent.
template <typename F>
std::optional<Matrix<F>> solve_matrix(const Matrix<F>& a, const Matrix<F>& b) {
    Matrix<F> out(a.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        std::vector<F> col(b.rows());
        for (std::size_t i = 0; i < b.rows(); ++i) col[i] = b(i, j);
        auto x = solve(a, col);
        if (!x) return std::nullopt;
        for (std::size_t i = 0; i < a.cols(); ++i) out(i, j) = (*x)[i];
    }
    return out;
}

template <typename F>
Matrix<F> inverse_matrix(const Matrix<F>& a, const F& one) {
    if (a.rows() != a.cols()) throw domain_error("inverse of a nonsquare matrix");
    auto x = solve_matrix(a, Matrix<F>::identity(a.rows(), one));
    if (!x) throw consistency_error("matrix is singular");
    return *x;
}

template <typename F>
F det(Matrix<F> m) {
    if (m.rows() != m.cols()) throw domain_error("determinant of a nonsquare matrix");
    const std::size_t n = m.rows();
    bool negate = false;
    F result;
    bool first = true;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pr = col;
        while (pr < n && m(pr, col).is_zero()) ++pr;
        if (pr == n) return F();
        if (pr != col) {
            negate = !negate;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(pr, j), m(col, j));
        }
        const F pivot = m(col, col);
        result = first ? pivot : result * pivot;
        first = false;
        const F inv = pivot.inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col).is_zero()) continue;
            const F factor = m(i, col) * inv;
            for (std::size_t j = col; j < n; ++j)
                m(i, j) = m(i, j) - factor * m(col, j);
        }
    }
    if (negate) result = F() - result;
    return result;
}

// Indices of a maximal independent subset of the given row vectors, found by
// greedy elimination in input order.
template <typename F>
std::vector<std::size_t> independent_rows(const std::vector<std::vector<F>>& rows) {
    if (rows.empty()) return {};
    Matrix<F> m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    // Transpose so row indices become pivot columns.
    Matrix<F> t = m.transposed();
    std::vector<std::size_t> pivots = rref(t);
    return pivots;
}

}  // namespace isoform
