#pragma once

#include <initializer_list>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "ncnewton/errors.hpp"
#include "ncnewton/rational.hpp"

namespace ncnewton {

/// Square d×d matrix of rationals, used as a single ring element. For d >= 2
/// multiplication is noncommutative, which is what the rest of the library is
/// exercised against; the ring has zero divisors, so invertibility of an
/// element is decided exactly, never assumed.
class BlockElement {
public:
    explicit BlockElement(int dim)
        : dim_(check_dim(dim)), e_(static_cast<size_t>(dim) * dim, Rational(0)) {}

    BlockElement(int dim, std::vector<Rational> entries) : dim_(check_dim(dim)), e_(std::move(entries)) {
        if (e_.size() != static_cast<size_t>(dim_) * dim_)
            throw std::invalid_argument("block entry count does not match dimension");
    }

    BlockElement(std::initializer_list<std::initializer_list<Rational>> rows) {
        dim_ = check_dim(static_cast<int>(rows.size()));
        e_.reserve(static_cast<size_t>(dim_) * dim_);
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != dim_)
                throw std::invalid_argument("block rows must form a square array");
            e_.insert(e_.end(), row.begin(), row.end());
        }
    }

    static BlockElement identity(int dim) {
        BlockElement b(dim);
        for (int i = 0; i < dim; ++i) b.at(i, i) = Rational(1);
        return b;
    }

    /// r times the identity.
    static BlockElement scalar(int dim, const Rational& r) {
        BlockElement b(dim);
        for (int i = 0; i < dim; ++i) b.at(i, i) = r;
        return b;
    }

    int dim() const noexcept { return dim_; }

    Rational& at(int r, int c) { return e_[static_cast<size_t>(r) * dim_ + c]; }
    const Rational& at(int r, int c) const { return e_[static_cast<size_t>(r) * dim_ + c]; }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    BlockElement operator-() const {
        BlockElement r(*this);
        for (auto& x : r.e_) x = -x;
        return r;
    }

    BlockElement& operator+=(const BlockElement& o) {
        require_same_dim(o, "block addition");
        for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
        return *this;
    }
    BlockElement& operator-=(const BlockElement& o) {
        require_same_dim(o, "block subtraction");
        for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
        return *this;
    }

    friend BlockElement operator+(BlockElement a, const BlockElement& b) { return a += b; }
    friend BlockElement operator-(BlockElement a, const BlockElement& b) { return a -= b; }

    friend BlockElement operator*(const BlockElement& a, const BlockElement& b) {
        a.require_same_dim(b, "block multiplication");
        int d = a.dim_;
        BlockElement r(d);
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k) {
                const Rational& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < d; ++j) r.at(i, j) += aik * b.at(k, j);
            }
        return r;
    }
    BlockElement& operator*=(const BlockElement& o) { return *this = *this * o; }

    friend bool operator==(const BlockElement& a, const BlockElement& b) {
        return a.dim_ == b.dim_ && a.e_ == b.e_;
    }

    /// Exact two-sided inverse via Gauss-Jordan elimination over the
    /// rationals, first nonzero pivot in each column. nullopt when singular.
    std::optional<BlockElement> try_inverse() const {
        int d = dim_;
        BlockElement a(*this);
        BlockElement z = identity(d);
        for (int col = 0; col < d; ++col) {
            int piv = -1;
            for (int r = col; r < d; ++r)
                if (!a.at(r, col).is_zero()) { piv = r; break; }
            if (piv < 0) return std::nullopt;
            if (piv != col) {
                for (int j = 0; j < d; ++j) {
                    std::swap(a.at(piv, j), a.at(col, j));
                    std::swap(z.at(piv, j), z.at(col, j));
                }
            }
            Rational inv = a.at(col, col).inverse();
            for (int j = 0; j < d; ++j) {
                a.at(col, j) *= inv;
                z.at(col, j) *= inv;
            }
            for (int r = 0; r < d; ++r) {
                if (r == col || a.at(r, col).is_zero()) continue;
                Rational f = a.at(r, col);
                for (int j = 0; j < d; ++j) {
                    a.at(r, j) -= f * a.at(col, j);
                    z.at(r, j) -= f * z.at(col, j);
                }
            }
        }
        return z;
    }

    BlockElement inverse() const {
        auto r = try_inverse();
        if (!r) throw NotInvertibleError("singular block element");
        return *r;
    }

    friend std::ostream& operator<<(std::ostream& os, const BlockElement& b) {
        os << "[";
        for (int r = 0; r < b.dim_; ++r) {
            os << (r ? ",[" : "[");
            for (int c = 0; c < b.dim_; ++c) os << (c ? "," : "") << b.at(r, c);
            os << "]";
        }
        return os << "]";
    }

private:
    static int check_dim(int d) {
        if (d < 1) throw std::invalid_argument("block dimension must be positive");
        return d;
    }
    void require_same_dim(const BlockElement& o, const char* what) const {
        if (dim_ != o.dim_)
            throw VariantMismatchError(std::string(what) + ": block dimensions differ");
    }

    int dim_;
    std::vector<Rational> e_;
};

}  // namespace ncnewton
