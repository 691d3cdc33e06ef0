#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "ncnewton/errors.hpp"

namespace ncnewton {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator. Thin value-semantic wrapper around GMP's mpq_class;
/// all arithmetic is exact.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}           // NOLINT(google-explicit-constructor)
    Rational(long n) : v_(n) {}          // NOLINT(google-explicit-constructor)
    Rational(long num, long den) {
        if (den == 0) throw NotInvertibleError("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw NotInvertibleError("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& num) : v_(num) {}

    /// Parses "p" or "p/q" with optional leading '-' on either part.
    static Rational from_string(std::string_view text);

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw NotInvertibleError("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    std::optional<Rational> try_inverse() const {
        if (is_zero()) return std::nullopt;
        return Rational(mpq_class(1 / v_));
    }
    Rational inverse() const {
        auto r = try_inverse();
        if (!r) throw NotInvertibleError("inverse of zero");
        return *r;
    }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational pow(unsigned e) const {
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), e);
        mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), e);
        Rational r;
        r.v_ = mpq_class(num, den);  // powers of a canonical fraction stay canonical
        return r;
    }

    /// Canonical text form: "p" when the denominator is 1, else "p/q".
    std::string to_string() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;
};

namespace detail {
inline bool is_integer_token(std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}
}  // namespace detail

inline Rational Rational::from_string(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!detail::is_integer_token(num))
        throw ParseError("invalid rational literal '" + std::string(text) + "'");
    if (slash == std::string_view::npos)
        return Rational(mpz_class(std::string(num)));
    std::string_view den = text.substr(slash + 1);
    if (!detail::is_integer_token(den))
        throw ParseError("invalid rational literal '" + std::string(text) + "'");
    mpz_class d{std::string(den)};
    if (d == 0) throw ParseError("rational literal with zero denominator");
    return Rational(mpz_class(std::string(num)), d);
}

inline Rational factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

/// Rounded decimal approximation with `digits` places after the point
/// (round half away from zero). Exact rationals are the product; this is a
/// display convenience only.
inline std::string decimal_string(const Rational& r, int digits) {
    if (digits < 0) throw std::invalid_argument("decimal_string: negative digit count");
    mpz_class p = r.numerator();
    mpz_class q = r.denominator();
    bool neg = p < 0;
    if (neg) p = -p;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class scaled = p * scale;
    mpz_class quot, rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), q.get_mpz_t());
    if (2 * rem >= q) quot += 1;
    std::string s = quot.get_str();
    if (digits > 0) {
        if (static_cast<int>(s.size()) <= digits)
            s.insert(0, static_cast<size_t>(digits) + 1 - s.size(), '0');
        s.insert(s.size() - static_cast<size_t>(digits), ".");
    }
    if (neg && quot != 0) s.insert(0, "-");
    return s;
}

}  // namespace ncnewton
