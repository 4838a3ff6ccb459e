#pragma once

#include "apx/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace apx {

/// The four indeterminates a coefficient table may mention.
enum class Var : std::uint8_t { x = 0, y = 1, X = 2, Y = 3 };

inline constexpr std::size_t kVarCount = 4;

const char* var_name(Var v);

using Exponent = std::array<std::uint32_t, kVarCount>;

/// Graded order on exponent vectors: total degree first, then the exponent
/// of x, y, X, Y in that order. Printing walks terms from largest to smallest,
/// so x^2 comes before x*y before y^2 before x.
struct GradedLess {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Assignment of rational values to indeterminates.
using Point = std::array<std::optional<Rational>, kVarCount>;

/// Sparse polynomial over the rationals in x, y, X, Y. No stored term has a
/// zero coefficient, so structural equality is polynomial equality.
class PolyXY {
public:
    using Terms = std::map<Exponent, Rational, GradedLess>;

    PolyXY() = default;
    PolyXY(const Rational& constant); // NOLINT(google-explicit-constructor)
    PolyXY(long constant) : PolyXY(Rational(constant)) {} // NOLINT(google-explicit-constructor)

    static PolyXY var(Var v);
    static PolyXY monomial(const Rational& coeff, const Exponent& exp);

    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    /// The constant value if the polynomial has no indeterminates.
    [[nodiscard]] std::optional<Rational> constant_value() const;

    PolyXY& operator+=(const PolyXY& rhs);
    PolyXY& operator-=(const PolyXY& rhs);
    PolyXY& operator*=(const PolyXY& rhs);

    friend PolyXY operator+(PolyXY a, const PolyXY& b) { return a += b; }
    friend PolyXY operator-(PolyXY a, const PolyXY& b) { return a -= b; }
    friend PolyXY operator*(const PolyXY& a, const PolyXY& b);
    friend PolyXY operator-(const PolyXY& a);

    friend bool operator==(const PolyXY& a, const PolyXY& b) { return a.terms_ == b.terms_; }

    /// Exact value at a point. Throws UsageError if an indeterminate that
    /// appears in the polynomial has no assigned value.
    [[nodiscard]] Rational eval(const Point& point) const;

    /// Canonical text such as "x^2 - x + 1/6" or "1/2*x*y^2 - 3".
    [[nodiscard]] std::string str() const;

private:
    void add_term(const Exponent& exp, const Rational& coeff);

    Terms terms_;
};

} // namespace apx
