#pragma once

#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ncnewton/errors.hpp"
#include "ncnewton/ring.hpp"

namespace ncnewton {

/// Ordered list of pairwise distinct nonnegative indices (a finite prefix of
/// a permutation). Validation happens where a sequence meets a matrix.
using IndexSequence = std::vector<int>;

inline void validate_index_sequence(const IndexSequence& seq, int bound, const char* what) {
    for (size_t a = 0; a < seq.size(); ++a) {
        if (seq[a] < 0 || seq[a] >= bound)
            throw IndexOutOfBoundsError(std::string(what) + " index " + std::to_string(seq[a]) +
                                        " out of range [0, " + std::to_string(bound) + ")");
        for (size_t b = a + 1; b < seq.size(); ++b)
            if (seq[a] == seq[b])
                throw DuplicateIndexError(std::string(what) + " index " + std::to_string(seq[a]) +
                                          " repeated");
    }
}

/// Dense row-major matrix over an exact ring scalar. The stored array uses
/// the convention that the entry at (row k, column i) is the pairing y_i^k:
/// upper index = row, lower index = column. All entries of one matrix share
/// one scalar kind (and block dimension).
template <Ring S>
class Matrix {
public:
    Matrix() = default;

    Matrix(int rows, int cols, const S& fill)
        : rows_(check_extent(rows)), cols_(check_extent(cols)),
          data_(static_cast<size_t>(rows) * static_cast<size_t>(cols), fill) {}

    Matrix(std::initializer_list<std::initializer_list<S>> rows) {
        rows_ = static_cast<int>(rows.size());
        cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
        data_.reserve(static_cast<size_t>(rows_) * cols_);
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != cols_)
                throw std::invalid_argument("matrix rows of unequal length");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(int n, const S& like) {
        Matrix m(n, n, ring_traits<S>::zero_like(like));
        for (int i = 0; i < n; ++i) m.at(i, i) = ring_traits<S>::one_like(like);
        return m;
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }
    bool is_square() const noexcept { return rows_ == cols_; }

    S& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const S& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
    S& operator()(int r, int c) { return at(r, c); }
    const S& operator()(int r, int c) const { return at(r, c); }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    Matrix transpose() const {
        if (empty()) return Matrix(cols_, rows_);
        Matrix t(cols_, rows_, data_.front());
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b, "matrix addition");
        Matrix r(a);
        for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = r.data_[i] + b.data_[i];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b, "matrix subtraction");
        Matrix r(a);
        for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = r.data_[i] - b.data_[i];
        return r;
    }

    /// Product with factor order preserved entrywise: (a*b)(i,j) = sum_k a(i,k) b(k,j).
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        if (a.rows_ == 0 || b.cols_ == 0) return Matrix(a.rows_, b.cols_);
        if (a.cols_ == 0)
            throw std::invalid_argument("matrix product with empty inner dimension");
        Matrix r(a.rows_, b.cols_, ring_traits<S>::zero_like(a.data_.front()));
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const S& aik = a.at(i, k);
                if (ring_traits<S>::is_zero(aik)) continue;
                for (int j = 0; j < b.cols_; ++j) r.at(i, j) = r.at(i, j) + aik * b.at(k, j);
            }
        return r;
    }

private:
    Matrix(int rows, int cols) : rows_(rows), cols_(cols) {}  // empty-data shapes only

    static int check_extent(int n) {
        if (n < 0) throw std::invalid_argument("negative matrix extent");
        return n;
    }
    void require_same_shape(const Matrix& o, const char* what) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument(std::string(what) + ": shape mismatch");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<S> data_;
};

template <Ring S>
std::ostream& operator<<(std::ostream& os, const Matrix<S>& m) {
    os << "[";
    for (int r = 0; r < m.rows(); ++r) {
        os << (r ? ",[" : "[");
        for (int c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m.at(r, c);
        os << "]";
    }
    return os << "]";
}

/// Submatrix with the given column and row selections, order preserved:
/// result(j, l) = m(rows[j], cols[l]).
template <Ring S>
Matrix<S> submatrix(const Matrix<S>& m, const IndexSequence& cols, const IndexSequence& rows) {
    validate_index_sequence(cols, m.cols(), "column");
    validate_index_sequence(rows, m.rows(), "row");
    if (cols.empty() || rows.empty()) return Matrix<S>{};
    Matrix<S> r(static_cast<int>(rows.size()), static_cast<int>(cols.size()),
                ring_traits<S>::zero_like(m.at(rows[0], cols[0])));
    for (size_t j = 0; j < rows.size(); ++j)
        for (size_t l = 0; l < cols.size(); ++l)
            r.at(static_cast<int>(j), static_cast<int>(l)) = m.at(rows[j], cols[l]);
    return r;
}

/// Leading n×n truncation.
template <Ring S>
Matrix<S> leading(const Matrix<S>& m, int n) {
    if (n < 0 || n > m.rows() || n > m.cols())
        throw IndexOutOfBoundsError("leading truncation of order " + std::to_string(n) +
                                    " exceeds matrix extent");
    if (n == 0) return Matrix<S>{};
    Matrix<S> r(n, n, ring_traits<S>::zero_like(m.at(0, 0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i, j) = m.at(i, j);
    return r;
}

/// Exact two-sided inverse by Gauss-Jordan elimination. Pivot selection
/// scans down the current column for the first *invertible* entry (decided
/// exactly); when no pivot exists the matrix is reported non-generic at that
/// elimination step. The result is verified to be a right inverse as well.
template <Ring S>
Matrix<S> invert(const Matrix<S>& m) {
    if (!m.is_square()) throw std::invalid_argument("invert requires a square matrix");
    int n = m.rows();
    if (n == 0) return Matrix<S>{};
    Matrix<S> a(m);
    Matrix<S> z = Matrix<S>::identity(n, m.at(0, 0));
    for (int col = 0; col < n; ++col) {
        std::optional<S> pinv;
        int piv = -1;
        for (int r = col; r < n; ++r) {
            pinv = ring_traits<S>::try_inverse(a.at(r, col));
            if (pinv) { piv = r; break; }
        }
        if (piv < 0)
            throw NonGenericError(col, "no invertible pivot in elimination");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(z.at(piv, j), z.at(col, j));
            }
        for (int j = 0; j < n; ++j) {
            a.at(col, j) = *pinv * a.at(col, j);
            z.at(col, j) = *pinv * z.at(col, j);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || ring_traits<S>::is_zero(a.at(r, col))) continue;
            S f = a.at(r, col);
            for (int j = 0; j < n; ++j) {
                a.at(r, j) = a.at(r, j) - f * a.at(col, j);
                z.at(r, j) = z.at(r, j) - f * z.at(col, j);
            }
        }
    }
    // Row reduction yields a left inverse; the contract is the two-sided one.
    if (!(m * z == Matrix<S>::identity(n, m.at(0, 0))))
        throw std::logic_error("left inverse failed the right-inverse check");
    return z;
}

template <Ring S>
std::optional<Matrix<S>> try_invert(const Matrix<S>& m) {
    try {
        return invert(m);
    } catch (const NonGenericError&) {
        return std::nullopt;
    }
}

/// Quasideterminant with column index i and row index j: the inverse of
/// entry (row i, column j) of the inverse matrix. With the storage
/// convention above, the inverse matrix holds z_k^i at (row i, column k),
/// so quasidet(d, i, k) inverts z_k^i. A 1×1 matrix has its single entry as
/// its only quasideterminant.
template <Ring S>
S quasidet(const Matrix<S>& m, int i, int j) {
    if (!m.is_square()) throw std::invalid_argument("quasidet requires a square matrix");
    int n = m.rows();
    if (n == 0) throw IndexOutOfBoundsError("quasideterminant of an empty matrix");
    if (i < 0 || i >= n || j < 0 || j >= n)
        throw IndexOutOfBoundsError("quasideterminant position (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ") out of range");
    if (n == 1) return m.at(0, 0);
    Matrix<S> z = invert(m);
    auto inv = ring_traits<S>::try_inverse(z.at(i, j));
    if (!inv)
        throw NonGenericError(n - 1, "inverse-matrix entry is not invertible");
    return *inv;
}

}  // namespace ncnewton
