#pragma once

#include <concepts>
#include <optional>
#include <variant>

#include "ncnewton/block.hpp"
#include "ncnewton/errors.hpp"
#include "ncnewton/rational.hpp"

namespace ncnewton {

/// Per-scalar hooks the generic algorithms need beyond plain operators.
/// `zero_like` / `one_like` take a witness element so that sized scalars
/// (blocks) can produce identities of the right dimension.
template <class S>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static Rational zero_like(const Rational&) { return Rational(0); }
    static Rational one_like(const Rational&) { return Rational(1); }
    static bool is_zero(const Rational& a) { return a.is_zero(); }
    static std::optional<Rational> try_inverse(const Rational& a) { return a.try_inverse(); }
};

template <>
struct ring_traits<BlockElement> {
    static BlockElement zero_like(const BlockElement& a) { return BlockElement(a.dim()); }
    static BlockElement one_like(const BlockElement& a) { return BlockElement::identity(a.dim()); }
    static bool is_zero(const BlockElement& a) { return a.is_zero(); }
    static std::optional<BlockElement> try_inverse(const BlockElement& a) { return a.try_inverse(); }
};

template <class S>
concept Ring = requires(const S& a, const S& b) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a* b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { a == b } -> std::convertible_to<bool>;
    { ring_traits<S>::zero_like(a) } -> std::convertible_to<S>;
    { ring_traits<S>::one_like(a) } -> std::convertible_to<S>;
    { ring_traits<S>::is_zero(a) } -> std::convertible_to<bool>;
    { ring_traits<S>::try_inverse(a) } -> std::convertible_to<std::optional<S>>;
};

template <Ring S>
S zero_like(const S& a) { return ring_traits<S>::zero_like(a); }
template <Ring S>
S one_like(const S& a) { return ring_traits<S>::one_like(a); }
template <Ring S>
bool is_zero(const S& a) { return ring_traits<S>::is_zero(a); }
template <Ring S>
std::optional<S> try_inverse(const S& a) { return ring_traits<S>::try_inverse(a); }

template <Ring S>
S ring_inverse_of(const S& a) {
    auto r = try_inverse(a);
    if (!r) throw NotInvertibleError("element has no inverse");
    return *r;
}

/// Runtime-tagged ring element for the serialization and CLI boundary.
/// Inside the algorithms the variant is already resolved: a whole matrix is
/// either Matrix<Rational> or Matrix<BlockElement>.
using RingElement = std::variant<Rational, BlockElement>;

namespace detail {
inline void require_compatible(const RingElement& a, const RingElement& b) {
    if (a.index() != b.index())
        throw VariantMismatchError("ring elements of different kinds");
    if (const auto* pa = std::get_if<BlockElement>(&a)) {
        if (pa->dim() != std::get<BlockElement>(b).dim())
            throw VariantMismatchError("block elements of different dimension");
    }
}
}  // namespace detail

inline RingElement ring_add(const RingElement& a, const RingElement& b) {
    detail::require_compatible(a, b);
    return std::visit(
        [&](const auto& x) -> RingElement {
            using S = std::decay_t<decltype(x)>;
            return x + std::get<S>(b);
        },
        a);
}

inline RingElement ring_mul(const RingElement& a, const RingElement& b) {
    detail::require_compatible(a, b);
    return std::visit(
        [&](const auto& x) -> RingElement {
            using S = std::decay_t<decltype(x)>;
            return x * std::get<S>(b);
        },
        a);
}

inline RingElement ring_inverse(const RingElement& a) {
    return std::visit([](const auto& x) -> RingElement { return ring_inverse_of(x); }, a);
}

inline bool ring_equal(const RingElement& a, const RingElement& b) {
    if (a.index() != b.index()) return false;
    return std::visit(
        [&](const auto& x) {
            using S = std::decay_t<decltype(x)>;
            return x == std::get<S>(b);
        },
        a);
}

}  // namespace ncnewton
