#pragma once

#include "apx/error.hpp"
#include "apx/ring.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace apx {

/// Truncated formal power series in t: coefficients of t^0..t^N, exact
/// modulo t^(N+1). N is the truncation order.
template <CoefficientRing R>
class Series {
public:
    explicit Series(std::size_t order) : coeffs_(order + 1, R(Rational(0))) {}

    explicit Series(std::vector<R> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty())
            throw UsageError("series needs at least one coefficient");
    }

    static Series one(std::size_t order) { return monomial(R(Rational(1)), 0, order); }

    /// c * t^k truncated at `order`; zero if k > order.
    static Series monomial(const R& c, std::size_t k, std::size_t order)
    {
        Series s(order);
        if (k <= order)
            s.coeffs_[k] = c;
        return s;
    }

    [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
    [[nodiscard]] const R& operator[](std::size_t k) const { return coeffs_[k]; }
    [[nodiscard]] R& operator[](std::size_t k) { return coeffs_[k]; }
    [[nodiscard]] const std::vector<R>& coeffs() const { return coeffs_; }

    /// Smallest k with a nonzero coefficient; nullopt for the zero prefix.
    [[nodiscard]] std::optional<std::size_t> valuation() const
    {
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            if (!coeffs_[k].is_zero())
                return k;
        return std::nullopt;
    }

    [[nodiscard]] Series truncated(std::size_t order) const
    {
        if (order > this->order())
            throw UsageError("cannot extend a series past its truncation order");
        return Series(std::vector<R>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
    }

    Series& operator+=(const Series& rhs)
    {
        check_same_order(*this, rhs);
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            coeffs_[k] = coeffs_[k] + rhs.coeffs_[k];
        return *this;
    }

    Series& operator-=(const Series& rhs)
    {
        check_same_order(*this, rhs);
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            coeffs_[k] = coeffs_[k] - rhs.coeffs_[k];
        return *this;
    }

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator-(const Series& a)
    {
        Series out(a.order());
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
            out.coeffs_[k] = -a.coeffs_[k];
        return out;
    }

    friend Series operator*(const R& c, const Series& a)
    {
        Series out(a.order());
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
            out.coeffs_[k] = c * a.coeffs_[k];
        return out;
    }

    friend bool operator==(const Series&, const Series&) = default;

    static void check_same_order(const Series& a, const Series& b)
    {
        if (a.order() != b.order())
            throw UsageError("series truncation orders differ (" + std::to_string(a.order()) + " vs " +
                             std::to_string(b.order()) + ")");
    }

private:
    std::vector<R> coeffs_;
};

/// Cauchy product at a common truncation order.
template <CoefficientRing R>
Series<R> mul(const Series<R>& a, const Series<R>& b)
{
    Series<R>::check_same_order(a, b);
    const std::size_t n = a.order();
    Series<R> out(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; i + j <= n; ++j)
            if (!b[j].is_zero())
                out[i + j] = out[i + j] + a[i] * b[j];
    }
    return out;
}

template <CoefficientRing R>
Series<R> operator*(const Series<R>& a, const Series<R>& b)
{
    return mul(a, b);
}

/// Quotient num/den. The common power t^v (v = valuation of den) is cancelled
/// first, so the result has truncation order N - v. Requires valuation(num) >= v
/// and an invertible coefficient of t^v in den.
template <CoefficientRing R>
Series<R> divide(const Series<R>& num, const Series<R>& den)
{
    Series<R>::check_same_order(num, den);
    const auto v = den.valuation();
    if (!v)
        throw DomainError("division by a series that vanishes to the truncation order");
    const auto vn = num.valuation();
    if (vn && *vn < *v)
        throw DomainError("non-series quotient: numerator valuation " + std::to_string(*vn) +
                          " is below denominator valuation " + std::to_string(*v));
    const auto lead_inv = try_invert(den[*v]);
    if (!lead_inv)
        throw DomainError("leading coefficient of the divisor is not invertible");

    const std::size_t order = num.order() - *v;
    Series<R> q(order);
    for (std::size_t k = 0; k <= order; ++k) {
        R acc = num[k + *v];
        for (std::size_t i = 1; i <= k; ++i)
            if (!den[*v + i].is_zero())
                acc = acc - den[*v + i] * q[k - i];
        q[k] = acc * *lead_inv;
    }
    return q;
}

/// m-fold product; m = 0 gives one.
template <CoefficientRing R>
Series<R> int_pow(const Series<R>& a, unsigned m)
{
    Series<R> result = Series<R>::one(a.order());
    Series<R> base = a;
    while (m > 0) {
        if (m & 1u)
            result = mul(result, base);
        m >>= 1u;
        if (m > 0)
            base = mul(base, base);
    }
    return result;
}

/// exp(c t^s) = sum over k with s*k <= N of c^k t^(s k) / k!.
template <CoefficientRing R>
Series<R> exp_monomial(const R& c, unsigned s, std::size_t order)
{
    if (s == 0)
        throw UsageError("exp_monomial needs a positive exponent");
    Series<R> out(order);
    R power(Rational(1));
    Integer fact = 1;
    for (std::size_t k = 0; k * s <= order; ++k) {
        if (k > 0) {
            power = power * c;
            fact *= static_cast<unsigned long>(k);
        }
        out[k * s] = power * R(Rational(Integer(1), fact));
    }
    return out;
}

/// Substitution t -> c t: coefficient k is multiplied by c^k.
template <CoefficientRing R>
Series<R> scale_t(const Series<R>& a, const Rational& c)
{
    Series<R> out(a.order());
    Rational power(1);
    for (std::size_t k = 0; k <= a.order(); ++k) {
        if (k > 0)
            power *= c;
        out[k] = R(power) * a[k];
    }
    return out;
}

/// Multiplication by t^k at the same truncation order.
template <CoefficientRing R>
Series<R> shift(const Series<R>& a, std::size_t k)
{
    Series<R> out(a.order());
    for (std::size_t i = 0; i + k <= a.order(); ++i)
        out[i + k] = a[i];
    return out;
}

/// n! times the coefficient of t^n.
template <CoefficientRing R>
R coeff_factorial(const Series<R>& a, std::size_t n)
{
    if (n > a.order())
        throw UsageError("coefficient index " + std::to_string(n) + " exceeds truncation order " +
                         std::to_string(a.order()));
    return R(Rational(factorial(n))) * a[n];
}

/// Reinterprets a rational series over another coefficient ring.
template <CoefficientRing R>
Series<R> lift(const Series<Rational>& a)
{
    std::vector<R> out;
    out.reserve(a.order() + 1);
    for (const auto& c : a.coeffs())
        out.emplace_back(c);
    return Series<R>(std::move(out));
}

} // namespace apx
