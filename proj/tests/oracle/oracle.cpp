#include "oracle.hpp"

#include <stdexcept>

namespace oracle {

using apx::BaseKind;
using apx::Classical;
using apx::Integer;

Series<Rational> exp_series(const Rational& c, std::size_t order)
{
    Series<Rational> out(order);
    Rational term(1);
    for (std::size_t k = 0; k <= order; ++k) {
        if (k > 0)
            term = term * c / Rational(static_cast<long>(k));
        out[k] = term;
    }
    return out;
}

Series<Rational> phi_series(const Base& base, const Rational& y, std::size_t order)
{
    if (base.kind == BaseKind::unit)
        return Series<Rational>::one(order);
    if (base.kind == BaseKind::exp)
        return exp_series(y, order);

    const std::size_t s = base.degree;
    Series<Rational> out(order);
    Rational yk(1);
    Rational kfact(1);
    for (std::size_t k = 0; s * k <= order; ++k) {
        if (k > 0) {
            yk *= y;
            kfact *= Rational(static_cast<long>(k));
        }
        switch (base.kind) {
        case BaseKind::gould_hopper: out[s * k] = yk / kfact; break;
        case BaseKind::laguerre: out[s * k] = yk / (kfact * kfact); break;
        case BaseKind::trunc_exp: out[s * k] = yk; break;
        default: break;
        }
    }
    return out;
}

Series<Rational> kernel_via_difference_expansion(const Rational& lambda, std::size_t order)
{
    if (lambda == Rational(-1))
        throw std::invalid_argument("difference expansion needs lambda != -1");
    const Rational inv = Rational(1) / (lambda + Rational(1));
    const Rational ratio = -lambda * inv;

    Series<Rational> em1 = exp_series(Rational(1), order);
    em1[0] = Rational(0);

    Series<Rational> out(order);
    Series<Rational> power = Series<Rational>::one(order);
    Rational weight = inv;
    for (std::size_t j = 0; j <= order; ++j) {
        if (j > 0) {
            power = apx::mul(power, em1);
            weight *= ratio;
        }
        out += weight * power;
    }
    return out;
}

std::vector<Rational> bernoulli_numbers(unsigned n)
{
    std::vector<Rational> b{Rational(1)};
    for (unsigned j = 1; j <= n; ++j) {
        Rational acc(0);
        for (unsigned k = 0; k < j; ++k)
            acc += Rational(apx::binomial(j + 1, k)) * b[k];
        b.push_back(-acc / Rational(static_cast<long>(j + 1)));
    }
    return b;
}

Series<Rational> bernoulli_series(std::size_t order)
{
    const auto b = bernoulli_numbers(static_cast<unsigned>(order));
    Series<Rational> out(order);
    for (std::size_t k = 0; k <= order; ++k)
        out[k] = b[k] / Rational(apx::factorial(k));
    return out;
}

Series<Rational> single_kernel(const Rational& lambda, int mu, unsigned nu, std::size_t order)
{
    const Rational two_mu = Rational(2).pow(mu);
    if (lambda == Rational(-1)) {
        // 1/(1 - e^t) = -(1/t) t/(e^t - 1)
        if (nu == 0)
            throw std::invalid_argument("lambda = -1 needs nu >= 1");
        return apx::shift(Rational(-1) * two_mu * bernoulli_series(order), nu - 1);
    }
    return apx::shift(two_mu * kernel_via_difference_expansion(lambda, order), nu);
}

namespace {

std::vector<Rational> read_off(const Series<Rational>& s, unsigned n_max)
{
    std::vector<Rational> out;
    for (unsigned n = 0; n <= n_max; ++n)
        out.push_back(Rational(apx::factorial(n)) * s[n]);
    return out;
}

Series<Rational> repeated(const Series<Rational>& a, unsigned m)
{
    Series<Rational> out = Series<Rational>::one(a.order());
    for (unsigned i = 0; i < m; ++i)
        out = apx::mul(out, a);
    return out;
}

} // namespace

std::vector<Rational> atp_via_factored_product(const FamilyParams& params, const Rational& x, const Rational& y,
                                               unsigned n_max)
{
    const std::size_t order = n_max;
    const auto kernel = repeated(single_kernel(params.lambda, params.mu, params.nu, order), params.m);
    return read_off(apx::mul(apx::mul(kernel, exp_series(x, order)), phi_series(params.base, y, order)), n_max);
}

bool genocchi_shift_oracle(unsigned m, const Rational& lambda, const Rational& x, const Rational& y,
                           const Base& base, unsigned n_max)
{
    const auto g = apx::classical_reduce(Classical::genocchi, m, lambda, x, y, base, n_max);
    const auto e = apx::classical_reduce(Classical::euler, m, lambda, x, y, base, n_max);
    for (unsigned n = 0; n <= n_max; ++n) {
        if (n < m) {
            if (!g[n].is_zero())
                return false;
            continue;
        }
        const Rational falling = Rational(apx::factorial(n)) / Rational(apx::factorial(n - m));
        if (g[n] != falling * e[n - m])
            return false;
    }
    return true;
}

std::vector<Rational> classical_direct(Classical which, unsigned m, const Rational& lambda, const Rational& x,
                                       const Rational& y, const Base& base, unsigned n_max)
{
    const std::size_t order = n_max;
    Series<Rational> single(order);
    switch (which) {
    case Classical::bernoulli:
        if (lambda == Rational(1))
            single = bernoulli_series(order);
        else // t/(lambda e^t - 1) = -t/(-lambda e^t + 1)
            single = apx::shift(Rational(-1) * kernel_via_difference_expansion(-lambda, order), 1);
        break;
    case Classical::euler:
        single = Rational(2) * kernel_via_difference_expansion(lambda, order);
        break;
    case Classical::genocchi:
        single = apx::shift(Rational(2) * kernel_via_difference_expansion(lambda, order), 1);
        break;
    }
    const auto gf = apx::mul(apx::mul(repeated(single, m), exp_series(x, order)), phi_series(base, y, order));
    return read_off(gf, n_max);
}

bool gen_power_sums_satisfy_definition(apx::SumKind kind, unsigned n, const Rational& lambda,
                                       const std::vector<Rational>& sums)
{
    const std::size_t k_max = sums.size() - 1;
    const bool is_s = kind == apx::SumKind::S;

    // S: sum * (lambda e^t - 1) = lambda e^((n+1)t) - 1
    // M: sum * (lambda e^t + 1) = 1 - lambda (-1)^(n+1) e^((n+1)t)
    const Rational shift_const = is_s ? Rational(-1) : Rational(1);
    const bool den_vanishes = lambda + shift_const == Rational(0);
    // With a zero constant term in the denominator the product at t^(k+1)
    // still only involves sums up to k, so one more coefficient is checkable.
    const std::size_t order = den_vanishes ? k_max + 1 : k_max;

    Series<Rational> gen(order);
    for (std::size_t k = 0; k <= k_max; ++k)
        gen[k] = sums[k] / Rational(apx::factorial(k));

    Series<Rational> den = lambda * exp_series(Rational(1), order);
    den[0] += shift_const;

    const Rational sign = n % 2 == 0 ? Rational(-1) : Rational(1);
    const auto grow = exp_series(Rational(static_cast<long>(n) + 1), order);
    Series<Rational> num = is_s ? lambda * grow : Rational(-1) * lambda * sign * grow;
    num[0] += is_s ? Rational(-1) : Rational(1);

    return apx::mul(gen, den) == num;
}

namespace {

Series<Rational> kernel_at(const Rational& lambda, long a, std::size_t order)
{
    return apx::scale_t(kernel_via_difference_expansion(lambda, order), Rational(a));
}

std::vector<Rational> scaled_read_off(const Series<Rational>& s, const apx::IdentityPoint& pt, unsigned n_max)
{
    const auto& f = pt.family;
    const Rational scale = Rational(static_cast<long>(pt.c) * static_cast<long>(pt.d)).pow(f.nu * f.m);
    auto out = read_off(s, n_max);
    for (auto& v : out)
        v *= scale;
    return out;
}

} // namespace

std::vector<Rational> g_series_sides(const apx::IdentityPoint& pt, unsigned n_max)
{
    const auto& f = pt.family;
    const std::size_t order = n_max;
    const long c = pt.c;
    const long d = pt.d;
    const Rational cd(c * d);

    Series<Rational> g = Rational(2).pow(f.mu * static_cast<long>(2 * f.m - 1)) *
                         apx::shift(Series<Rational>::one(order), f.nu * (2 * f.m - 1));
    g = apx::mul(g, exp_series(cd * (pt.x + pt.X), order));
    g = apx::mul(g, apx::scale_t(phi_series(f.base, pt.y, order), cd));
    g = apx::mul(g, apx::scale_t(phi_series(f.base, pt.Y, order), cd));

    Series<Rational> bridge = f.lambda * exp_series(cd, order);
    bridge[0] += Rational(1);
    g = apx::mul(g, bridge);

    g = apx::mul(g, repeated(kernel_at(f.lambda, c, order), f.m));
    g = apx::mul(g, repeated(kernel_at(f.lambda, d, order), f.m));
    return scaled_read_off(g, pt, n_max);
}

std::vector<Rational> h_series_sides(const apx::IdentityPoint& pt, unsigned n_max)
{
    const auto& f = pt.family;
    const std::size_t order = n_max;
    const long c = pt.c;
    const long d = pt.d;
    const Rational cd(c * d);

    Series<Rational> h = Rational(2).pow(f.mu * static_cast<long>(2 * f.m)) *
                         apx::shift(Series<Rational>::one(order), f.nu * 2 * f.m);
    h = apx::mul(h, exp_series(cd * (pt.x + pt.X), order));
    h = apx::mul(h, apx::scale_t(phi_series(f.base, pt.y, order), cd));
    h = apx::mul(h, apx::scale_t(phi_series(f.base, pt.Y, order), cd));

    for (long a : {c, d}) {
        Series<Rational> bridge = f.lambda.pow(a) * exp_series(cd, order);
        bridge[0] += Rational(1);
        h = apx::mul(h, bridge);
    }
    h = apx::mul(h, repeated(kernel_at(f.lambda, c, order), f.m + 1));
    h = apx::mul(h, repeated(kernel_at(f.lambda, d, order), f.m + 1));
    return scaled_read_off(h, pt, n_max);
}

} // namespace oracle
