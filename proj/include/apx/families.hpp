#pragma once

#include "apx/series.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace apx {

enum class BaseKind { unit, exp, gould_hopper, laguerre, trunc_exp };

/// Second factor phi(y, t) of the 2-variable generating function.
///   unit          1
///   exp           e^(y t)
///   gould_hopper  e^(y t^s)
///   laguerre      C0(-y t^s) = sum y^k t^(s k) / (k!)^2
///   trunc_exp     1 / (1 - y t^r) = sum y^k t^(r k)
/// `degree` is s or r; it is ignored for unit and exp.
struct Base {
    BaseKind kind = BaseKind::unit;
    unsigned degree = 1;

    /// The exponent e with phi(y, a t) = phi(a^e y, t).
    [[nodiscard]] unsigned scaling_exponent() const;
    [[nodiscard]] std::string name() const;
    /// "gould_hopper(2)" style label; plain name for unit and exp.
    [[nodiscard]] std::string label() const;

    static Base parse(std::string_view name, unsigned degree);

    friend bool operator==(const Base&, const Base&) = default;
};

/// One member of the unified Apostol-type family with generating function
///   (2^mu t^nu / (lambda e^t + 1))^m e^(x t) phi(y, t).
struct FamilyParams {
    unsigned m = 1;
    Rational lambda{1};
    int mu = 1;
    unsigned nu = 0;
    Base base{};

    /// Throws DomainError for lambda = 0 or the singular lambda = -1, nu = 0.
    void validate() const;

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// Entry n is n! [t^n] of the generating function.
template <CoefficientRing R>
using PolySeq = std::vector<R>;

enum class Classical { bernoulli, euler, genocchi };
enum class SumKind { S, M };

const char* classical_name(Classical which);
Classical parse_classical(std::string_view name);

/// Truncation order used for family computations: n_max + nu m + 2.
std::size_t truncation_order(const FamilyParams& params, unsigned n_max);

template <CoefficientRing R>
Series<R> base_phi(const Base& base, const R& y, std::size_t order)
{
    switch (base.kind) {
    case BaseKind::unit:
        return Series<R>::one(order);
    case BaseKind::exp:
        return exp_monomial(y, 1, order);
    case BaseKind::gould_hopper:
        return exp_monomial(y, base.degree, order);
    case BaseKind::laguerre:
    case BaseKind::trunc_exp: {
        Series<R> out(order);
        R power(Rational(1));
        Integer fact = 1;
        for (std::size_t k = 0; k * base.degree <= order; ++k) {
            if (k > 0) {
                power = power * y;
                fact *= static_cast<unsigned long>(k);
            }
            out[k * base.degree] =
                base.kind == BaseKind::laguerre ? power * R(Rational(Integer(1), fact * fact)) : power;
        }
        return out;
    }
    }
    throw UsageError("unknown base kind");
}

/// (2^mu t^nu / (lambda e^t + 1))^m truncated at `order`. For lambda = -1 the
/// simple pole at t = 0 is cancelled against t^nu, which needs nu >= 1.
Series<Rational> apostol_kernel(unsigned m, const Rational& lambda, int mu, unsigned nu, std::size_t order);

/// kernel * e^(x t) * phi(y, t), read off as n! [t^n] for n <= n_max.
template <CoefficientRing R>
PolySeq<R> sequence_from_kernel(const Series<Rational>& kernel, const Base& base, const R& x, const R& y,
                                unsigned n_max)
{
    const std::size_t order = kernel.order();
    if (order < n_max)
        throw UsageError("kernel truncated below the requested index");
    const Series<R> product = mul(mul(lift<R>(kernel), exp_monomial(x, 1, order)), base_phi(base, y, order));
    PolySeq<R> out;
    out.reserve(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n)
        out.push_back(coeff_factorial(product, n));
    return out;
}

/// Values F_0..F_{n_max} of the 2-variable Apostol-type family at (x, y).
template <CoefficientRing R>
PolySeq<R> atp_sequence(const FamilyParams& params, const R& x, const R& y, unsigned n_max)
{
    params.validate();
    const auto kernel =
        apostol_kernel(params.m, params.lambda, params.mu, params.nu, truncation_order(params, n_max));
    return sequence_from_kernel(kernel, params.base, x, y, n_max);
}

/// Unified-family parameters realizing an Apostol-Bernoulli, -Euler or
/// -Genocchi member. Bernoulli flips the sign of lambda (and the values carry
/// an extra (-1)^m, see classical_reduce).
FamilyParams classical_params(Classical which, unsigned m, const Rational& lambda, const Base& base);

template <CoefficientRing R>
PolySeq<R> classical_reduce(Classical which, unsigned m, const Rational& lambda, const R& x, const R& y,
                            const Base& base, unsigned n_max)
{
    auto values = atp_sequence(classical_params(which, m, lambda, base), x, y, n_max);
    if (which == Classical::bernoulli && m % 2 == 1)
        for (auto& v : values)
            v = -v;
    return values;
}

/// S: sum_{i=0}^n i^k.  M: sum_{i=0}^n (-1)^i i^k.  0^0 = 1.
Rational power_sum_direct(SumKind kind, unsigned k, unsigned n);

/// Generalized sums for k = 0..k_max, by exact series division of
///   S: (lambda e^((n+1)t) - 1) / (lambda e^t - 1)
///   M: (1 - lambda (-e^t)^(n+1)) / (lambda e^t + 1)
std::vector<Rational> gen_power_sums(SumKind kind, unsigned n, const Rational& lambda, unsigned k_max);

Rational gen_power_sum(SumKind kind, unsigned k, unsigned n, const Rational& lambda);

} // namespace apx
