#pragma once

#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "ncnewton/rational.hpp"

namespace ncnewton {

/// Dense univariate polynomial with exact rational coefficients, ascending
/// degree, kept canonical (no trailing zero coefficient; the zero polynomial
/// stores nothing and reports degree() == -1 as its sentinel).
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit Polynomial(const Rational& constant) : c_{constant} { trim(); }

    static Polynomial monomial(int degree, const Rational& coeff = Rational(1)) {
        if (degree < 0) throw std::invalid_argument("monomial of negative degree");
        if (coeff.is_zero()) return Polynomial{};
        std::vector<Rational> c(static_cast<size_t>(degree) + 1, Rational(0));
        c.back() = coeff;
        Polynomial p;
        p.c_ = std::move(c);
        return p;
    }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }

    /// Coefficient of x^i (zero beyond the degree).
    Rational coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
        return c_[static_cast<size_t>(i)];
    }
    const std::vector<Rational>& coefficients() const noexcept { return c_; }

    Rational evaluate(const Rational& x) const {
        Rational acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial{};
        std::vector<Rational> d;
        d.reserve(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) d.push_back(Rational(static_cast<long>(i)) * c_[i]);
        return Polynomial(std::move(d));
    }

    Polynomial derivative(int times) const {
        Polynomial p = *this;
        for (int i = 0; i < times; ++i) p = p.derivative();
        return p;
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial{};
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Polynomial& p, const Rational& s) {
        std::vector<Rational> c(p.c_);
        for (auto& x : c) x *= s;
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Rational& s, const Polynomial& p) { return p * s; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        if (p.is_zero()) return os << "0";
        for (size_t i = 0; i < p.c_.size(); ++i) {
            if (i) os << " + ";
            os << p.c_[i];
            if (i >= 1) os << "*x^" << i;
        }
        return os;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

}  // namespace ncnewton
