#pragma once

// Test-only helpers: seeded random data in the ranges the test plan fixes
// (numerators in [-9, 9], denominators in [-9, 9] minus zero) and oracles
// that stay independent of the library's computation paths (cofactor
// determinants, adjugate inverses, a self-contained linear solver, the
// classical difference table, brute-force symmetric functions).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "ncnewton/applications.hpp"
#include "ncnewton/biortho.hpp"
#include "ncnewton/matrix.hpp"

namespace testsupport {

using ncnewton::BiorthoResult;
using ncnewton::BlockElement;
using ncnewton::IndexSequence;
using ncnewton::Matrix;
using ncnewton::Polynomial;
using ncnewton::Rational;

class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    int uniform(int lo, int hi) {  // inclusive bounds
        return std::uniform_int_distribution<int>(lo, hi)(eng_);
    }

    Rational rational() {
        int num = uniform(-9, 9);
        int den = 0;
        while (den == 0) den = uniform(-9, 9);
        return Rational(num, den);
    }

    Rational nonzero_rational() {
        Rational r = rational();
        while (r.is_zero()) r = rational();
        return r;
    }

    BlockElement block(int dim) {
        BlockElement b(dim);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) b.at(r, c) = rational();
        return b;
    }

    Matrix<Rational> rational_matrix(int rows, int cols) {
        Matrix<Rational> m(rows, cols, Rational(0));
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) m.at(r, c) = rational();
        return m;
    }

    Matrix<BlockElement> block_matrix(int rows, int cols, int dim) {
        Matrix<BlockElement> m(rows, cols, BlockElement(dim));
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) m.at(r, c) = block(dim);
        return m;
    }

    /// Distinct rationals (used as interpolation nodes).
    std::vector<Rational> distinct_rationals(int count) {
        std::vector<Rational> out;
        while (static_cast<int>(out.size()) < count) {
            Rational r = rational();
            bool fresh = true;
            for (const auto& x : out)
                if (x == r) { fresh = false; break; }
            if (fresh) out.push_back(r);
        }
        return out;
    }

    /// Distinct indices drawn from [0, bound).
    IndexSequence index_sequence(int length, int bound) {
        IndexSequence seq(static_cast<size_t>(bound));
        std::iota(seq.begin(), seq.end(), 0);
        std::shuffle(seq.begin(), seq.end(), eng_);
        seq.resize(static_cast<size_t>(length));
        return seq;
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        std::shuffle(v.begin(), v.end(), eng_);
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

/// Draws matrices until the order-n biorthogonalization succeeds, which is
/// the operational meaning of "generic".
inline Matrix<Rational> generic_rational_matrix(Rng& rng, int n) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Matrix<Rational> m = rng.rational_matrix(n + 1, n + 1);
        try {
            ncnewton::biorthogonalize(m, n);
            return m;
        } catch (const ncnewton::NonGenericError&) {
        }
    }
    throw std::runtime_error("no generic rational matrix found in 1000 draws");
}

inline Matrix<BlockElement> generic_block_matrix(Rng& rng, int n, int dim) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Matrix<BlockElement> m = rng.block_matrix(n + 1, n + 1, dim);
        try {
            ncnewton::biorthogonalize(m, n);
            return m;
        } catch (const ncnewton::NonGenericError&) {
        }
    }
    throw std::runtime_error("no generic block matrix found in 1000 draws");
}

// ---- oracles ----------------------------------------------------------------

/// Determinant by cofactor expansion along the first row.
inline Rational det_cofactor(const Matrix<Rational>& m) {
    const int n = m.rows();
    if (n == 0) return Rational(1);
    if (n == 1) return m.at(0, 0);
    Rational det(0);
    for (int c = 0; c < n; ++c) {
        if (m.at(0, c).is_zero()) continue;
        Matrix<Rational> minor(n - 1, n - 1, Rational(0));
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c2 = 0; c2 < n; ++c2) {
                if (c2 == c) continue;
                minor.at(r - 1, cc++) = m.at(r, c2);
            }
        }
        Rational term = m.at(0, c) * det_cofactor(minor);
        det = (c % 2 == 0) ? det + term : det - term;
    }
    return det;
}

/// Minor with one column and one row removed (quasideterminant convention:
/// first index = column, second = row).
inline Matrix<Rational> delete_col_row(const Matrix<Rational>& m, int col, int row) {
    Matrix<Rational> out(m.rows() - 1, m.cols() - 1, Rational(0));
    int rr = 0;
    for (int r = 0; r < m.rows(); ++r) {
        if (r == row) continue;
        int cc = 0;
        for (int c = 0; c < m.cols(); ++c) {
            if (c == col) continue;
            out.at(rr, cc++) = m.at(r, c);
        }
        ++rr;
    }
    return out;
}

/// Inverse through the adjugate; throws when singular.
inline Matrix<Rational> adjugate_inverse(const Matrix<Rational>& m) {
    const int n = m.rows();
    Rational det = det_cofactor(m);
    if (det.is_zero()) throw std::runtime_error("adjugate oracle: singular matrix");
    Matrix<Rational> inv(n, n, Rational(0));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Rational cof = det_cofactor(delete_col_row(m, r, c));
            inv.at(r, c) = ((r + c) % 2 == 0 ? cof : -cof) / det;
        }
    return inv;
}

/// Block matrix realized as one big rational matrix.
inline Matrix<Rational> flatten(const Matrix<BlockElement>& m) {
    const int d = m.at(0, 0).dim();
    Matrix<Rational> out(m.rows() * d, m.cols() * d, Rational(0));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) out.at(r * d + i, c * d + j) = m.at(r, c).at(i, j);
    return out;
}

inline Matrix<BlockElement> unflatten(const Matrix<Rational>& m, int dim) {
    Matrix<BlockElement> out(m.rows() / dim, m.cols() / dim, BlockElement(dim));
    for (int r = 0; r < out.rows(); ++r)
        for (int c = 0; c < out.cols(); ++c)
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j)
                    out.at(r, c).at(i, j) = m.at(r * dim + i, c * dim + j);
    return out;
}

/// Self-contained Gaussian solver for A X = B (first nonzero pivot, partial
/// row swaps); deliberately shares no code with the library.
inline Matrix<Rational> solve_linear(Matrix<Rational> a, Matrix<Rational> b) {
    const int n = a.rows();
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!a.at(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) throw std::runtime_error("solve oracle: singular matrix");
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
            for (int j = 0; j < b.cols(); ++j) std::swap(b.at(piv, j), b.at(col, j));
        }
        Rational inv = a.at(col, col).inverse();
        for (int j = 0; j < n; ++j) a.at(col, j) *= inv;
        for (int j = 0; j < b.cols(); ++j) b.at(col, j) *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            Rational f = a.at(r, col);
            for (int j = 0; j < n; ++j) a.at(r, j) -= f * a.at(col, j);
            for (int j = 0; j < b.cols(); ++j) b.at(r, j) -= f * b.at(col, j);
        }
    }
    return b;
}

/// Coefficients of the unique degree-n polynomial through the points,
/// via the solver above.
inline std::vector<Rational> lagrange_solve(const std::vector<Rational>& nodes,
                                            const std::vector<Rational>& values, int order) {
    const int n = order + 1;
    Matrix<Rational> a(n, n, Rational(0));
    Matrix<Rational> b(n, 1, Rational(0));
    for (int i = 0; i < n; ++i) {
        Rational p(1);
        for (int k = 0; k < n; ++k) {
            a.at(i, k) = p;
            p *= nodes[static_cast<size_t>(i)];
        }
        b.at(i, 0) = values[static_cast<size_t>(i)];
    }
    Matrix<Rational> x = solve_linear(std::move(a), std::move(b));
    std::vector<Rational> out;
    for (int k = 0; k < n; ++k) out.push_back(x.at(k, 0));
    return out;
}

/// Classical difference table: the order-m difference of the values at the
/// given nodes.
inline Rational classical_divided_difference(const std::vector<Rational>& nodes,
                                             const std::vector<Rational>& values, int m) {
    std::vector<Rational> table(values.begin(), values.begin() + m + 1);
    for (int level = 1; level <= m; ++level)
        for (int j = 0; j + level <= m; ++j)
            table[static_cast<size_t>(j)] =
                (table[static_cast<size_t>(j)] - table[static_cast<size_t>(j) + 1]) /
                (nodes[static_cast<size_t>(j)] - nodes[static_cast<size_t>(j) + level]);
    return table[0];
}

/// Complete homogeneous symmetric polynomial h_r by brute-force enumeration
/// of monomials (multisets of size r over the variables).
inline Rational h_complete(const std::vector<Rational>& vars, int r) {
    Rational sum(0);
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start, int remaining, const Rational& prod) -> void {
        if (remaining == 0) {
            sum += prod;
            return;
        }
        for (int i = start; i < static_cast<int>(vars.size()); ++i)
            self(self, i, remaining - 1, prod * vars[static_cast<size_t>(i)]);
    };
    rec(rec, 0, r, Rational(1));
    return sum;
}

inline IndexSequence iota_sequence(int n) {
    IndexSequence seq(static_cast<size_t>(n));
    std::iota(seq.begin(), seq.end(), 0);
    return seq;
}

}  // namespace testsupport
