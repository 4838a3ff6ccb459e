#include "apx/families.hpp"

namespace apx {

unsigned Base::scaling_exponent() const
{
    switch (kind) {
    case BaseKind::unit:
    case BaseKind::exp:
        return 1;
    case BaseKind::gould_hopper:
    case BaseKind::laguerre:
    case BaseKind::trunc_exp:
        return degree;
    }
    return 1;
}

std::string Base::name() const
{
    switch (kind) {
    case BaseKind::unit: return "unit";
    case BaseKind::exp: return "exp";
    case BaseKind::gould_hopper: return "gould_hopper";
    case BaseKind::laguerre: return "laguerre";
    case BaseKind::trunc_exp: return "trunc_exp";
    }
    return "unknown";
}

std::string Base::label() const
{
    if (kind == BaseKind::unit || kind == BaseKind::exp)
        return name();
    return name() + "(" + std::to_string(degree) + ")";
}

Base Base::parse(std::string_view name, unsigned degree)
{
    Base b;
    if (name == "unit")
        b.kind = BaseKind::unit;
    else if (name == "exp")
        b.kind = BaseKind::exp;
    else if (name == "gould_hopper")
        b.kind = BaseKind::gould_hopper;
    else if (name == "laguerre")
        b.kind = BaseKind::laguerre;
    else if (name == "trunc_exp")
        b.kind = BaseKind::trunc_exp;
    else
        throw UsageError("unknown base '" + std::string(name) + "'");
    if (b.kind == BaseKind::unit || b.kind == BaseKind::exp)
        degree = 1;
    if (degree == 0)
        throw UsageError("base degree must be positive");
    b.degree = degree;
    return b;
}

void FamilyParams::validate() const
{
    if (lambda.is_zero())
        throw DomainError("lambda must be nonzero");
    if (base.degree == 0)
        throw UsageError("base degree must be positive");
    if (m > 0 && lambda == Rational(-1) && nu == 0)
        throw DomainError("singular kernel: lambda = -1 needs nu >= 1");
}

const char* classical_name(Classical which)
{
    switch (which) {
    case Classical::bernoulli: return "bernoulli";
    case Classical::euler: return "euler";
    case Classical::genocchi: return "genocchi";
    }
    return "unknown";
}

Classical parse_classical(std::string_view name)
{
    if (name == "bernoulli")
        return Classical::bernoulli;
    if (name == "euler")
        return Classical::euler;
    if (name == "genocchi")
        return Classical::genocchi;
    throw UsageError("unknown family '" + std::string(name) + "'");
}

std::size_t truncation_order(const FamilyParams& params, unsigned n_max)
{
    return static_cast<std::size_t>(n_max) + static_cast<std::size_t>(params.nu) * params.m + 2;
}

Series<Rational> apostol_kernel(unsigned m, const Rational& lambda, int mu, unsigned nu, std::size_t order)
{
    if (m == 0)
        return Series<Rational>::one(order);
    if (lambda.is_zero())
        throw DomainError("lambda must be nonzero");

    // Work one order higher when the denominator vanishes at t = 0 so the
    // quotient still reaches `order`.
    const std::size_t pole = lambda == Rational(-1) ? 1 : 0;
    const std::size_t work = order + pole;
    const auto num = Series<Rational>::monomial(Rational(2).pow(mu), nu, work);
    const auto den = lambda * exp_monomial(Rational(1), 1, work) + Series<Rational>::one(work);
    return int_pow(divide(num, den), m);
}

FamilyParams classical_params(Classical which, unsigned m, const Rational& lambda, const Base& base)
{
    switch (which) {
    case Classical::bernoulli: return {m, -lambda, 0, 1, base};
    case Classical::euler: return {m, lambda, 1, 0, base};
    case Classical::genocchi: return {m, lambda, 1, 1, base};
    }
    throw UsageError("unknown classical family");
}

Rational power_sum_direct(SumKind kind, unsigned k, unsigned n)
{
    Integer sum = 0;
    for (unsigned i = 0; i <= n; ++i) {
        Integer term;
        mpz_ui_pow_ui(term.get_mpz_t(), i, k); // 0^0 = 1
        if (kind == SumKind::M && i % 2 == 1)
            sum -= term;
        else
            sum += term;
    }
    return Rational(sum);
}

std::vector<Rational> gen_power_sums(SumKind kind, unsigned n, const Rational& lambda, unsigned k_max)
{
    if (lambda.is_zero())
        throw DomainError("lambda must be nonzero");

    const Rational one(1);
    const bool pole = kind == SumKind::S ? lambda == one : lambda == -one;
    const std::size_t work = static_cast<std::size_t>(k_max) + (pole ? 1 : 0);
    const auto e_t = exp_monomial(one, 1, work);
    const auto e_n1 = exp_monomial(Rational(static_cast<long>(n) + 1), 1, work);
    const auto unit = Series<Rational>::one(work);

    Series<Rational> num(work);
    Series<Rational> den(work);
    if (kind == SumKind::S) {
        num = lambda * e_n1 - unit;
        den = lambda * e_t - unit;
    } else {
        // (-e^t)^(n+1) = (-1)^(n+1) e^((n+1)t)
        const Rational sign = n % 2 == 0 ? Rational(-1) : Rational(1);
        num = unit - (lambda * sign) * e_n1;
        den = lambda * e_t + unit;
    }

    const auto q = divide(num, den);
    std::vector<Rational> out;
    out.reserve(k_max + 1);
    for (unsigned k = 0; k <= k_max; ++k)
        out.push_back(coeff_factorial(q, k));
    return out;
}

Rational gen_power_sum(SumKind kind, unsigned k, unsigned n, const Rational& lambda)
{
    return gen_power_sums(kind, n, lambda, k).back();
}

} // namespace apx
