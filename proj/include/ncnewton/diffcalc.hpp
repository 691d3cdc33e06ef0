#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ncnewton/biortho.hpp"
#include "ncnewton/matrix.hpp"

namespace ncnewton {

/// Three independent routes to the same difference derivative. They must
/// agree exactly on generic data; exposing all of them turns the library
/// into its own cross-checking harness.
enum class DiffAlgorithm {
    recurrence,  // nested difference quotients, one-sided division
    quasidet,    // weights as inverses of quasideterminants
    biortho,     // weights read off the biorthogonalization
};

namespace detail {

// Weight-data getters with a fixed type so the recursive instantiations
// below stay finite (a fresh lambda per level would never converge).
template <Ring S>
struct row_getter {
    const Matrix<S>* d;
    int row;
    S operator()(int i) const { return d->at(row, i); }
};
template <Ring S>
struct col_getter {
    const Matrix<S>* d;
    int col;
    S operator()(int k) const { return d->at(k, col); }
};

template <Ring S, class Getter>
auto delta_right_rec(const Matrix<S>& d, const Getter& value_at, const IndexSequence& cols,
                     const IndexSequence& rows) -> std::decay_t<decltype(value_at(0))> {
    const size_t m = cols.size() - 1;
    if (m == 0) {
        auto inv = ring_traits<S>::try_inverse(d.at(rows[0], cols[0]));
        if (!inv) throw NonGenericError(0, "matrix entry in order-0 difference is not invertible");
        return value_at(cols[0]) * *inv;
    }
    IndexSequence cols_base(cols.begin(), cols.end() - 1);
    IndexSequence cols_alt(cols.begin(), cols.end() - 2);
    cols_alt.push_back(cols.back());
    IndexSequence rows_prefix(rows.begin(), rows.end() - 1);

    auto lhs = delta_right_rec(d, value_at, cols_base, rows_prefix) -
               delta_right_rec(d, value_at, cols_alt, rows_prefix);
    row_getter<S> row_value{&d, rows.back()};
    S w = delta_right_rec(d, row_value, cols_base, rows_prefix) -
          delta_right_rec(d, row_value, cols_alt, rows_prefix);
    auto winv = ring_traits<S>::try_inverse(w);
    if (!winv)
        throw NonGenericError(static_cast<int>(m), "difference-quotient divisor is not invertible");
    return lhs * *winv;  // the inverse multiplies on the right
}

template <Ring S, class Getter>
auto delta_left_rec(const Matrix<S>& d, const Getter& value_at, const IndexSequence& cols,
                    const IndexSequence& rows) -> std::decay_t<decltype(value_at(0))> {
    const size_t m = rows.size() - 1;
    if (m == 0) {
        auto inv = ring_traits<S>::try_inverse(d.at(rows[0], cols[0]));
        if (!inv) throw NonGenericError(0, "matrix entry in order-0 difference is not invertible");
        return *inv * value_at(rows[0]);
    }
    IndexSequence rows_base(rows.begin(), rows.end() - 1);
    IndexSequence rows_alt(rows.begin(), rows.end() - 2);
    rows_alt.push_back(rows.back());
    IndexSequence cols_prefix(cols.begin(), cols.end() - 1);

    auto lhs = delta_left_rec(d, value_at, cols_prefix, rows_base) -
               delta_left_rec(d, value_at, cols_prefix, rows_alt);
    col_getter<S> col_value{&d, cols.back()};
    S w = delta_left_rec(d, col_value, cols_prefix, rows_base) -
          delta_left_rec(d, col_value, cols_prefix, rows_alt);
    auto winv = ring_traits<S>::try_inverse(w);
    if (!winv)
        throw NonGenericError(static_cast<int>(m), "difference-quotient divisor is not invertible");
    return *winv * lhs;  // the inverse multiplies on the left
}

template <Ring S>
void validate_delta_args(const Matrix<S>& d, const IndexSequence& cols, const IndexSequence& rows,
                         size_t data_size, int data_bound) {
    if (cols.empty() || rows.empty())
        throw std::invalid_argument("difference derivative needs nonempty index sequences");
    if (cols.size() != rows.size())
        throw std::invalid_argument("column and row sequences must have equal length");
    validate_index_sequence(cols, d.cols(), "column");
    validate_index_sequence(rows, d.rows(), "row");
    if (static_cast<int>(data_size) < data_bound)
        throw IndexOutOfBoundsError("data vector does not cover the selected indices");
}

inline int max_index(const IndexSequence& seq) {
    int m = -1;
    for (int i : seq) m = i > m ? i : m;
    return m;
}

}  // namespace detail

/// m-th right difference derivative of the covector data f (indexed by
/// column) over the selected column/row sequences. All three algorithms
/// return the same ring element on generic data. M may be a right module
/// over the scalar ring (module values on the left of every product).
template <Ring S, class M = S>
M delta_right(const std::vector<M>& f, const Matrix<S>& d, const IndexSequence& cols,
              const IndexSequence& rows, DiffAlgorithm alg) {
    detail::validate_delta_args(d, cols, rows, f.size(), detail::max_index(cols) + 1);
    const int m = static_cast<int>(cols.size()) - 1;
    switch (alg) {
        case DiffAlgorithm::recurrence: {
            auto getter = [&](int i) -> const M& { return f[static_cast<size_t>(i)]; };
            return detail::delta_right_rec(d, getter, cols, rows);
        }
        case DiffAlgorithm::quasidet: {
            Matrix<S> sub = submatrix(d, cols, rows);
            std::vector<M> acc;
            for (int j = 0; j <= m; ++j) {
                S qd = quasidet(sub, j, m);
                auto inv = ring_traits<S>::try_inverse(qd);
                if (!inv)
                    throw NonGenericError(m, "quasideterminant weight is not invertible");
                acc.push_back(f[static_cast<size_t>(cols[j])] * *inv);
            }
            M sum = std::move(acc[0]);
            for (int j = 1; j <= m; ++j) sum = sum + acc[static_cast<size_t>(j)];
            return sum;
        }
        case DiffAlgorithm::biortho: {
            auto b = biorthogonalize(submatrix(d, cols, rows), m);
            M sum = f[static_cast<size_t>(cols[0])] * b.a.at(0, m);
            for (int j = 1; j <= m; ++j)
                sum = sum + f[static_cast<size_t>(cols[j])] * b.a.at(j, m);
            return sum;
        }
    }
    throw std::invalid_argument("unknown difference-derivative algorithm");
}

/// m-th left difference derivative of the vector data g (indexed by row);
/// mirror image of delta_right with every inverse multiplying on the left.
template <Ring S, class M = S>
M delta_left(const std::vector<M>& g, const Matrix<S>& d, const IndexSequence& cols,
             const IndexSequence& rows, DiffAlgorithm alg) {
    detail::validate_delta_args(d, cols, rows, g.size(), detail::max_index(rows) + 1);
    const int m = static_cast<int>(rows.size()) - 1;
    switch (alg) {
        case DiffAlgorithm::recurrence: {
            auto getter = [&](int k) -> const M& { return g[static_cast<size_t>(k)]; };
            return detail::delta_left_rec(d, getter, cols, rows);
        }
        case DiffAlgorithm::quasidet: {
            Matrix<S> sub = submatrix(d, cols, rows);
            std::vector<M> acc;
            for (int l = 0; l <= m; ++l) {
                S qd = quasidet(sub, m, l);
                auto inv = ring_traits<S>::try_inverse(qd);
                if (!inv)
                    throw NonGenericError(m, "quasideterminant weight is not invertible");
                acc.push_back(*inv * g[static_cast<size_t>(rows[l])]);
            }
            M sum = std::move(acc[0]);
            for (int l = 1; l <= m; ++l) sum = sum + acc[static_cast<size_t>(l)];
            return sum;
        }
        case DiffAlgorithm::biortho: {
            auto b = biorthogonalize(submatrix(d, cols, rows), m);
            M sum = b.c.at(m, 0) * g[static_cast<size_t>(rows[0])];
            for (int l = 1; l <= m; ++l)
                sum = sum + b.c.at(m, l) * g[static_cast<size_t>(rows[l])];
            return sum;
        }
    }
    throw std::invalid_argument("unknown difference-derivative algorithm");
}

/// Inverse of the order-n leading truncation through the summation formula:
/// entry (i, k) is the sum over m >= max(i, k) of
///   (corner column weight) * pivot * (corner row weight),
/// all three factors shared across entries through one biorthogonalization
/// pass. Factor order is exactly as written; it matters for noncommutative
/// entries.
template <Ring S>
Matrix<S> inverse_by_summation(const Matrix<S>& d, int order) {
    auto b = biorthogonalize(d, order);
    const int n = order + 1;
    Matrix<S> z(n, n, ring_traits<S>::zero_like(d.at(0, 0)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const int lo = i > k ? i : k;
            S sum = b.a.at(i, lo) * b.pivots[static_cast<size_t>(lo)] * b.c.at(lo, k);
            for (int m = lo + 1; m < n; ++m)
                sum = sum + b.a.at(i, m) * b.pivots[static_cast<size_t>(m)] * b.c.at(m, k);
            z.at(i, k) = std::move(sum);
        }
    return z;
}

/// Truncated pairing sum_{i,k} f_i * z(i,k) * g^k with z the summation-form
/// inverse. Reproduces f_i (resp. g^k) when the other argument runs over the
/// dual basis data.
template <Ring S, class FM = S, class GM = S>
auto pairing_truncated(const std::vector<FM>& f, const std::vector<GM>& g, const Matrix<S>& d,
                       int order) {
    if (static_cast<int>(f.size()) < order + 1 || static_cast<int>(g.size()) < order + 1)
        throw IndexOutOfBoundsError("pairing data does not cover indices 0..order");
    Matrix<S> z = inverse_by_summation(d, order);
    using R = decltype((f[0] * z.at(0, 0)) * g[0]);
    R acc = (f[0] * z.at(0, 0)) * g[0];
    for (int i = 0; i <= order; ++i)
        for (int k = 0; k <= order; ++k) {
            if (i == 0 && k == 0) continue;
            acc = acc + (f[static_cast<size_t>(i)] * z.at(i, k)) * g[static_cast<size_t>(k)];
        }
    return acc;
}

/// One term of the generalized interpolation expansion, kept unmultiplied
/// because the individual factors are meaningful (divided difference, node
/// product, basis polynomial...).
template <class FM, Ring S, class GM = FM>
struct NewtonExpansion {
    struct Term {
        FM delta_right;
        S pivot;
        GM delta_left;
    };

    int order = 0;
    std::vector<Term> terms;

    auto sum() const {
        using R = decltype((terms[0].delta_right * terms[0].pivot) * terms[0].delta_left);
        R acc = (terms[0].delta_right * terms[0].pivot) * terms[0].delta_left;
        for (size_t m = 1; m < terms.size(); ++m)
            acc = acc + (terms[m].delta_right * terms[m].pivot) * terms[m].delta_left;
        return acc;
    }
};

/// Expansion of the truncated pairing over the standard index sequences
/// (0, 1, ..., order): term m is (right difference, corner pivot, left
/// difference), and the terms sum to pairing_truncated exactly.
template <Ring S, class FM, class GM>
NewtonExpansion<FM, S, GM> newton_expand(const std::vector<FM>& f, const std::vector<GM>& g,
                                         const Matrix<S>& d, int order) {
    if (static_cast<int>(f.size()) < order + 1 || static_cast<int>(g.size()) < order + 1)
        throw IndexOutOfBoundsError("expansion data does not cover indices 0..order");
    auto b = biorthogonalize(d, order);
    NewtonExpansion<FM, S, GM> out;
    out.order = order;
    out.terms.reserve(static_cast<size_t>(order) + 1);
    for (int m = 0; m <= order; ++m) {
        FM dr = f[0] * b.a.at(0, m);
        for (int i = 1; i <= m; ++i) dr = dr + f[static_cast<size_t>(i)] * b.a.at(i, m);
        GM dl = b.c.at(m, 0) * g[0];
        for (int k = 1; k <= m; ++k) dl = dl + b.c.at(m, k) * g[static_cast<size_t>(k)];
        out.terms.push_back({std::move(dr), b.pivots[static_cast<size_t>(m)], std::move(dl)});
    }
    return out;
}

}  // namespace ncnewton
