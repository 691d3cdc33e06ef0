#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ncnewton/matrix.hpp"

namespace ncnewton {

/// Output of the biorthogonalization of the order-n leading truncation D_n:
/// an upper triangular A (a_m^i at row i, column m) and a lower triangular C
/// (c_k^m at row m, column k) such that D_n*A is lower unitriangular and
/// C*D_n is upper unitriangular, plus the corner pivots |D_m|_m^m. The
/// shared diagonal is a_m^m = c_m^m = pivot_m^{-1}.
template <Ring S>
struct BiorthoResult {
    int order = 0;
    Matrix<S> a;
    Matrix<S> c;
    std::vector<S> pivots;
};

/// Builds BiorthoResult incrementally: the inverse of the order-m truncation
/// is grown from the order-(m-1) one by bordering, so each step adds one row
/// and column and costs O(m^2) ring operations. The bordering pivot
///   s_m = d - v * Z_{m-1} * u
/// (u the new column, v the new row, d the corner) is the corner
/// quasideterminant of the truncation; it is recomputed independently through
/// full elimination and a mismatch aborts. A non-invertible s_m reports the
/// exact failing order.
template <Ring S>
BiorthoResult<S> biorthogonalize(const Matrix<S>& d, int order) {
    if (order < 0) throw std::invalid_argument("biorthogonalize: negative order");
    int n = order + 1;
    if (d.rows() < n || d.cols() < n)
        throw IndexOutOfBoundsError("biorthogonalize: order " + std::to_string(order) +
                                    " needs a matrix of at least " + std::to_string(n) + "x" +
                                    std::to_string(n));

    const S zero = ring_traits<S>::zero_like(d.at(0, 0));
    BiorthoResult<S> out;
    out.order = order;
    out.a = Matrix<S>(n, n, zero);
    out.c = Matrix<S>(n, n, zero);
    out.pivots.reserve(static_cast<size_t>(n));

    Matrix<S> z;  // inverse of the current leading truncation
    for (int m = 0; m < n; ++m) {
        // Bordering data for the step from order m-1 to order m.
        std::vector<S> t, r;  // t = Z*u, r = v*Z
        S s = d.at(m, m);
        if (m > 0) {
            t.reserve(static_cast<size_t>(m));
            r.reserve(static_cast<size_t>(m));
            for (int i = 0; i < m; ++i) {
                S ti = zero;
                S ri = zero;
                for (int j = 0; j < m; ++j) {
                    ti = ti + z.at(i, j) * d.at(j, m);
                    ri = ri + d.at(m, j) * z.at(j, i);
                }
                t.push_back(std::move(ti));
                r.push_back(std::move(ri));
            }
            for (int j = 0; j < m; ++j) s = s - d.at(m, j) * t[j];
        }

        // Independent route for the same pivot; disagreement means a bug.
        S check = [&] {
            try {
                return quasidet(leading(d, m + 1), m, m);
            } catch (const NonGenericError&) {
                throw NonGenericError(m, "pivot cross-check inversion failed");
            }
        }();
        if (!(check == s))
            throw std::logic_error("corner pivot disagrees with its quasideterminant");

        auto sinv = ring_traits<S>::try_inverse(s);
        if (!sinv) throw NonGenericError(m, "corner pivot is not invertible");

        Matrix<S> znew(m + 1, m + 1, zero);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) znew.at(i, j) = z.at(i, j) + t[i] * *sinv * r[j];
        for (int i = 0; i < m; ++i) {
            znew.at(i, m) = -(t[i] * *sinv);
            znew.at(m, i) = -(*sinv * r[i]);
        }
        znew.at(m, m) = *sinv;
        z = std::move(znew);

        // Column m of A solves D_m * a = e_m; row m of C solves c * D_m = e_m.
        for (int i = 0; i <= m; ++i) {
            out.a.at(i, m) = z.at(i, m);
            out.c.at(m, i) = z.at(m, i);
        }
        out.pivots.push_back(std::move(s));
    }
    return out;
}

/// Biorthogonalization of the bases reordered by the given column and row
/// sequences: identical to biorthogonalize applied to the selected
/// submatrix.
template <Ring S>
BiorthoResult<S> biorthogonalize_permuted(const Matrix<S>& d, const IndexSequence& cols,
                                          const IndexSequence& rows) {
    if (cols.size() != rows.size())
        throw std::invalid_argument("biorthogonalize_permuted: sequences of unequal length");
    if (cols.empty())
        throw std::invalid_argument("biorthogonalize_permuted: empty index sequences");
    return biorthogonalize(submatrix(d, cols, rows), static_cast<int>(cols.size()) - 1);
}

}  // namespace ncnewton
