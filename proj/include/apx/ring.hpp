#pragma once

#include "apx/poly.hpp"
#include "apx/rational.hpp"

#include <concepts>
#include <optional>

namespace apx {

// Every coefficient domain used by the series code. Zero and one come from
// R(Rational(0)) and R(Rational(1)); inversion goes through try_invert.
template <class R>
concept CoefficientRing = std::regular<R> && requires(const R a, const R b, const Rational q) {
    { a + b } -> std::same_as<R>;
    { a - b } -> std::same_as<R>;
    { a * b } -> std::same_as<R>;
    { -a } -> std::same_as<R>;
    { R(q) } -> std::same_as<R>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { try_invert(a) } -> std::same_as<std::optional<R>>;
};

inline std::optional<Rational> try_invert(const Rational& a)
{
    if (a.is_zero())
        return std::nullopt;
    return a.inverse();
}

// Only nonzero constants are units of the polynomial ring.
inline std::optional<PolyXY> try_invert(const PolyXY& a)
{
    auto c = a.constant_value();
    if (!c || c->is_zero())
        return std::nullopt;
    return PolyXY(c->inverse());
}

static_assert(CoefficientRing<Rational>);
static_assert(CoefficientRing<PolyXY>);

} // namespace apx
