#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ncnewton/biortho.hpp"
#include "ncnewton/diffcalc.hpp"
#include "ncnewton/matrix.hpp"
#include "ncnewton/polynomial.hpp"

namespace ncnewton {

inline void validate_nodes(const std::vector<Rational>& nodes) {
    for (size_t a = 0; a < nodes.size(); ++a)
        for (size_t b = a + 1; b < nodes.size(); ++b)
            if (nodes[a] == nodes[b])
                throw DuplicateNodeError("interpolation nodes must be pairwise distinct");
}

/// Power matrix of the given nodes: entry (row k, column i) = x_i^k,
/// 0 <= i, k <= order.
inline Matrix<Rational> vandermonde(const std::vector<Rational>& nodes, int order) {
    if (order < 0) throw std::invalid_argument("vandermonde: negative order");
    if (static_cast<int>(nodes.size()) < order + 1)
        throw IndexOutOfBoundsError("vandermonde: fewer nodes than order + 1");
    validate_nodes(nodes);
    const int n = order + 1;
    Matrix<Rational> d(n, n, Rational(0));
    for (int i = 0; i < n; ++i) {
        Rational p(1);
        for (int k = 0; k < n; ++k) {
            d.at(k, i) = p;
            p *= nodes[static_cast<size_t>(i)];
        }
    }
    return d;
}

/// Derivative-evaluation matrix at x0: entry (row k, column i) is the i-th
/// derivative of x^k at x0, i.e. k!/(k-i)! * x0^(k-i) for i <= k and zero
/// above the diagonal.
inline Matrix<Rational> taylor_matrix(const Rational& x0, int order) {
    if (order < 0) throw std::invalid_argument("taylor_matrix: negative order");
    const int n = order + 1;
    Matrix<Rational> d(n, n, Rational(0));
    for (int k = 0; k < n; ++k) {
        Rational falling(1);
        Rational power = x0.pow(static_cast<unsigned>(k));
        Rational x0inv;  // valid only when x0 != 0
        bool have_inv = !x0.is_zero();
        if (have_inv) x0inv = x0.inverse();
        for (int i = 0; i <= k; ++i) {
            d.at(k, i) = falling * power;
            falling *= Rational(k - i);
            if (have_inv)
                power *= x0inv;
            else
                power = (i + 1 == k) ? Rational(1) : Rational(0);  // x0 = 0: only x0^0 = 1 survives
        }
    }
    return d;
}

/// Expansion plus the interpolating polynomial it sums to.
struct InterpolationResult {
    NewtonExpansion<Rational, Rational, Polynomial> expansion;
    Polynomial polynomial;
};

namespace detail {
inline std::vector<Polynomial> monomials(int order) {
    std::vector<Polynomial> g;
    g.reserve(static_cast<size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) g.push_back(Polynomial::monomial(k));
    return g;
}
}  // namespace detail

/// Interpolation through distinct nodes: expands the pairing of the sampled
/// values against the symbolic monomial basis. Term m factors into the m-th
/// divided difference, the node product pivot, and the normalized degree-m
/// node polynomial; the summed result matches the values at every node.
inline InterpolationResult newton_interpolate(const std::vector<Rational>& nodes,
                                              const std::vector<Rational>& values, int order) {
    if (static_cast<int>(values.size()) < order + 1)
        throw IndexOutOfBoundsError("newton_interpolate: fewer values than order + 1");
    Matrix<Rational> d = vandermonde(nodes, order);
    try {
        auto expansion = newton_expand(values, detail::monomials(order), d, order);
        Polynomial p = expansion.sum();
        return {std::move(expansion), std::move(p)};
    } catch (const NonGenericError&) {
        // Distinct nodes make every truncation invertible.
        throw std::logic_error("interpolation matrix for distinct nodes reported non-generic");
    }
}

/// Interpolation from derivative data at one point: same expansion against
/// the derivative-evaluation matrix. derivs[i] is the i-th derivative at x0.
inline InterpolationResult taylor_interpolate(const Rational& x0,
                                              const std::vector<Rational>& derivs, int order) {
    if (static_cast<int>(derivs.size()) < order + 1)
        throw IndexOutOfBoundsError("taylor_interpolate: fewer derivatives than order + 1");
    Matrix<Rational> d = taylor_matrix(x0, order);
    auto expansion = newton_expand(derivs, detail::monomials(order), d, order);
    Polynomial p = expansion.sum();
    return {std::move(expansion), std::move(p)};
}

/// Divided difference of f at the arithmetic progression x0, x0+eps, ...,
/// x0+m*eps, paired with its coalescence target f^(m)(x0)/m!. The caller
/// compares the two; as eps shrinks the difference decays at least linearly.
struct ConfluentCheck {
    Rational difference;  // exact divided difference at the spread nodes
    Rational target;      // f^(m)(x0) / m!
};

inline ConfluentCheck confluent_limit_check(const Polynomial& f, const Rational& x0, int m,
                                            const Rational& eps) {
    if (m < 0) throw std::invalid_argument("confluent_limit_check: negative order");
    if (eps.is_zero()) throw DuplicateNodeError("confluent spread eps must be nonzero");
    std::vector<Rational> nodes;
    std::vector<Rational> values;
    nodes.reserve(static_cast<size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) {
        Rational xj = x0 + Rational(j) * eps;
        values.push_back(f.evaluate(xj));
        nodes.push_back(std::move(xj));
    }
    Matrix<Rational> d = vandermonde(nodes, m);
    IndexSequence idx(static_cast<size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) idx[static_cast<size_t>(j)] = j;
    Rational delta = delta_right(values, d, idx, idx, DiffAlgorithm::recurrence);
    Rational target = f.derivative(m).evaluate(x0) / factorial(m);
    return {std::move(delta), std::move(target)};
}

/// Orthogonalization of a basis with the given symmetric positive definite
/// Gram matrix. The C rows carry the orthogonalized basis coordinates
/// normalized so the pairing with the original basis vector is 1; the Gram
/// matrix of the new basis is diagonal with entries pivots[m]^{-1}.
/// Positive definiteness is decided by the pivots: a negative pivot raises
/// NotPositiveDefinite (a zero pivot already surfaces as NonGeneric).
inline BiorthoResult<Rational> gram_schmidt(const Matrix<Rational>& gram, int order) {
    if (!gram.is_square())
        throw NotPositiveDefiniteError("gram matrix must be square");
    for (int i = 0; i < gram.rows(); ++i)
        for (int j = i + 1; j < gram.cols(); ++j)
            if (!(gram.at(i, j) == gram.at(j, i)))
                throw NotPositiveDefiniteError("gram matrix is not symmetric");
    auto b = biorthogonalize(gram, order);
    for (const auto& pivot : b.pivots)
        if (pivot.sign() < 0)
            throw NotPositiveDefiniteError("gram matrix has a negative leading pivot");
    return b;
}

}  // namespace ncnewton
