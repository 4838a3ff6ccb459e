#include "apx/identities.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>
#include <tuple>

namespace apx {

const char* shape_name(Shape shape)
{
    return shape == Shape::power_sum ? "power_sum" : "geometric";
}

Shape parse_shape(std::string_view name)
{
    if (name == "power_sum")
        return Shape::power_sum;
    if (name == "geometric")
        return Shape::geometric;
    throw UsageError("unknown identity shape '" + std::string(name) + "'");
}

const char* outcome_name(Outcome outcome)
{
    switch (outcome) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::error: return "error";
    }
    return "error";
}

namespace {

std::vector<IdentityDescriptor> build_catalog()
{
    using enum IdentityId;
    const std::vector<Shape> ps{Shape::power_sum};
    const std::vector<Shape> geo{Shape::geometric};
    const std::vector<Shape> both{Shape::power_sum, Shape::geometric};
    const std::string general = "2^mu t^nu kernel, mu and nu free; power sums S_l(.; -lambda); weight -lambda";

    std::vector<IdentityDescriptor> out{
        {thm21, "thm21", ps, {}, {}, false, "2-variable Apostol-type, power-sum shape, any base", general},
        {thm22, "thm22", geo, {}, {}, false, "2-variable Apostol-type, geometric shape, any base", general},
        {cor31, "cor31", ps, {}, BaseKind::gould_hopper, false, "Gould-Hopper Apostol-type, power-sum shape",
         general + "; phi = exp(y t^s)"},
        {cor32, "cor32", geo, {}, BaseKind::gould_hopper, false, "Gould-Hopper Apostol-type, geometric shape",
         general + "; phi = exp(y t^s)"},
        {cor33, "cor33", ps, {}, BaseKind::laguerre, false,
         "2-variable generalized Laguerre Apostol-type, power-sum shape", general + "; phi = C0(-y t^s)"},
        {cor34, "cor34", geo, {}, BaseKind::laguerre, false,
         "2-variable generalized Laguerre Apostol-type, geometric shape", general + "; phi = C0(-y t^s)"},
        {cor35, "cor35", ps, {}, BaseKind::trunc_exp, false,
         "2-variable truncated exponential Apostol-type, power-sum shape", general + "; phi = 1/(1 - y t^r)"},
        {cor36, "cor36", geo, {}, BaseKind::trunc_exp, false,
         "2-variable truncated exponential Apostol-type, geometric shape", general + "; phi = 1/(1 - y t^r)"},
    };

    struct Table {
        std::string prefix;
        std::optional<BaseKind> base;
        bool lambda_one;
        std::string name;
    };
    const std::vector<Table> tables{
        {"tbl21", std::nullopt, false, "2-variable Apostol"},
        {"tbl22", std::nullopt, true, "2-variable"},
        {"tbl31", BaseKind::gould_hopper, false, "Gould-Hopper Apostol"},
        {"tbl32", BaseKind::laguerre, false, "2-variable generalized Laguerre Apostol"},
        {"tbl33", BaseKind::trunc_exp, false, "2-variable truncated exponential Apostol"},
    };
    struct Row {
        std::string suffix;
        Classical which;
        std::string name;
        std::string substitution;
    };
    const std::vector<Row> rows{
        {"B", Classical::bernoulli, "Bernoulli",
         "lambda -> -lambda, mu = 0, nu = 1, values times (-1)^m; power sums S_l(.; lambda); weight lambda"},
        {"E", Classical::euler, "Euler", "mu = 1, nu = 0; power sums M_l(.; lambda); weight -lambda"},
        {"G", Classical::genocchi, "Genocchi", "mu = 1, nu = 1; power sums M_l(.; lambda); weight -lambda"},
    };

    int next = static_cast<int>(tbl21_B);
    for (const auto& t : tables) {
        for (const auto& r : rows) {
            std::string subst = r.substitution;
            if (t.lambda_one)
                subst = "lambda = 1; " + subst;
            out.push_back({static_cast<IdentityId>(next++), t.prefix + "_" + r.suffix, both, r.which, t.base,
                           t.lambda_one, t.name + " " + r.name + " polynomials, both shapes", subst});
        }
    }

    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.tag < b.tag; });
    return out;
}

} // namespace

const std::vector<IdentityDescriptor>& identity_catalog()
{
    static const std::vector<IdentityDescriptor> catalog = build_catalog();
    return catalog;
}

const IdentityDescriptor& describe(IdentityId id)
{
    for (const auto& d : identity_catalog())
        if (d.id == id)
            return d;
    throw UsageError("identity id not in catalog");
}

IdentityId parse_identity(std::string_view tag)
{
    for (const auto& d : identity_catalog())
        if (d.tag == tag)
            return d.id;
    throw UsageError("unknown identity '" + std::string(tag) + "'");
}

bool point_less(const IdentityPoint& a, const IdentityPoint& b)
{
    auto key = [](const IdentityPoint& p) {
        return std::tie(p.shape, p.family.base.kind, p.family.base.degree, p.family.m, p.family.mu, p.family.nu,
                        p.family.lambda, p.c, p.d, p.n, p.x, p.y, p.X, p.Y);
    };
    return key(a) < key(b);
}

namespace {

// How a tag turns point values into the ingredients of the two shapes.
struct Row {
    std::optional<Classical> classical;
    SumKind sum_kind = SumKind::S;
    Rational sum_lambda;
    Rational weight;
    unsigned nu = 0;
};

Row resolve_row(const IdentityDescriptor& desc, const IdentityPoint& pt)
{
    const auto& f = pt.family;
    if (desc.base && f.base.kind != *desc.base)
        throw UsageError(desc.tag + " is stated for base " + Base{*desc.base, 1}.name() + ", point has " +
                         f.base.name());
    if (desc.lambda_one && !f.lambda.is_one())
        throw UsageError(desc.tag + " is the lambda = 1 specialization");
    if (std::find(desc.shapes.begin(), desc.shapes.end(), pt.shape) == desc.shapes.end())
        throw UsageError(desc.tag + " has no " + shape_name(pt.shape) + " form");
    if (pt.c == 0 || pt.d == 0)
        throw UsageError("c and d must be positive");
    if (f.m == 0)
        throw UsageError("symmetry identities need order m >= 1");

    Row row;
    row.classical = desc.classical;
    if (!desc.classical) {
        row.sum_kind = SumKind::S;
        row.sum_lambda = -f.lambda;
        row.weight = -f.lambda;
        row.nu = f.nu;
        return row;
    }
    switch (*desc.classical) {
    case Classical::bernoulli:
        row.sum_kind = SumKind::S;
        row.sum_lambda = f.lambda;
        row.weight = f.lambda; // (-1)^(i+j) (-lambda)^(i+j)
        row.nu = 1;
        break;
    case Classical::euler:
        row.sum_kind = SumKind::M;
        row.sum_lambda = f.lambda;
        row.weight = -f.lambda;
        row.nu = 0;
        break;
    case Classical::genocchi:
        row.sum_kind = SumKind::M;
        row.sum_lambda = f.lambda;
        row.weight = -f.lambda;
        row.nu = 1;
        break;
    }
    return row;
}

// Sequence values for one group of points: everything but the order and the
// (x, y) arguments is fixed, so kernels and sequences are memoized.
class SequenceSource {
public:
    SequenceSource(const Row& row, const FamilyParams& family, unsigned n_max)
        : row_(row), family_(family), n_max_(n_max)
    {
    }

    const PolySeq<Rational>& get(unsigned order, const Rational& x, const Rational& y)
    {
        auto key = std::make_tuple(order, x, y);
        auto it = values_.find(key);
        if (it != values_.end())
            return it->second;

        const FamilyParams p = params(order);
        p.validate();
        auto k = kernels_.find(order);
        if (k == kernels_.end())
            k = kernels_.emplace(order, apostol_kernel(p.m, p.lambda, p.mu, p.nu, truncation_order(p, n_max_)))
                    .first;
        auto seq = sequence_from_kernel(k->second, p.base, x, y, n_max_);
        if (row_.classical == Classical::bernoulli && order % 2 == 1)
            for (auto& v : seq)
                v = -v;
        return values_.emplace(std::move(key), std::move(seq)).first->second;
    }

private:
    FamilyParams params(unsigned order) const
    {
        if (row_.classical)
            return classical_params(*row_.classical, order, family_.lambda, family_.base);
        FamilyParams p = family_;
        p.m = order;
        return p;
    }

    Row row_;
    FamilyParams family_;
    unsigned n_max_;
    std::map<unsigned, Series<Rational>> kernels_;
    std::map<std::tuple<unsigned, Rational, Rational>, PolySeq<Rational>> values_;
};

Rational ipow(long base, unsigned e)
{
    return Rational(base).pow(e);
}

std::vector<Rational> power_sum_side(SequenceSource& src, const Row& row, const IdentityPoint& pt, unsigned c,
                                     unsigned d, const Rational& x, const Rational& y, const Rational& X,
                                     const Rational& Y, unsigned n_max)
{
    const unsigned e = pt.family.base.scaling_exponent();
    const unsigned m = pt.family.m;
    const auto& a = src.get(m, Rational(d) * x, ipow(d, e) * y);
    const auto& b = src.get(m - 1, Rational(c) * X, ipow(c, e) * Y);
    const auto sums = gen_power_sums(row.sum_kind, c - 1, row.sum_lambda, n_max);

    std::vector<Rational> inner(n_max + 1);
    for (unsigned k = 0; k <= n_max; ++k)
        for (unsigned l = 0; l <= k; ++l)
            inner[k] += Rational(binomial(k, l)) * sums[l] * b[k - l];

    std::vector<Rational> out(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n)
        for (unsigned k = 0; k <= n; ++k)
            out[n] += Rational(binomial(n, k)) * ipow(c, n - k) * ipow(d, row.nu + k) * a[n - k] * inner[k];
    return out;
}

std::vector<Rational> geometric_side(SequenceSource& src, const Row& row, const IdentityPoint& pt, unsigned c,
                                     unsigned d, const Rational& x, const Rational& y, const Rational& X,
                                     const Rational& Y, unsigned n_max)
{
    const unsigned e = pt.family.base.scaling_exponent();
    const unsigned m = pt.family.m;

    // The weight w^(i+j) factors into an i-sum and a j-sum.
    std::vector<Rational> sa(n_max + 1);
    std::vector<Rational> sb(n_max + 1);
    Rational w_i(1);
    for (unsigned i = 0; i < c; ++i) {
        const auto& a = src.get(m, Rational(d) * x + Rational(d, c) * Rational(i), ipow(d, e) * y);
        for (unsigned k = 0; k <= n_max; ++k)
            sa[k] += w_i * a[k];
        w_i *= row.weight;
    }
    Rational w_j(1);
    for (unsigned j = 0; j < d; ++j) {
        const auto& b = src.get(m, Rational(c) * X + Rational(c, d) * Rational(j), ipow(c, e) * Y);
        for (unsigned k = 0; k <= n_max; ++k)
            sb[k] += w_j * b[k];
        w_j *= row.weight;
    }

    std::vector<Rational> out(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n)
        for (unsigned k = 0; k <= n; ++k)
            out[n] += Rational(binomial(n, k)) * ipow(c, k) * ipow(d, n - k) * sa[k] * sb[n - k];
    return out;
}

std::vector<Sides> evaluate(const IdentityDescriptor& desc, const IdentityPoint& pt, unsigned n_max)
{
    const Row row = resolve_row(desc, pt);
    SequenceSource src(row, pt.family, n_max);
    const auto side = pt.shape == Shape::power_sum ? power_sum_side : geometric_side;
    const auto lhs = side(src, row, pt, pt.c, pt.d, pt.x, pt.y, pt.X, pt.Y, n_max);
    const auto rhs = side(src, row, pt, pt.d, pt.c, pt.x, pt.y, pt.X, pt.Y, n_max);
    std::vector<Sides> out;
    out.reserve(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n)
        out.push_back({lhs[n], rhs[n]});
    return out;
}

bool is_corollary(IdentityId id)
{
    return id >= IdentityId::cor31 && id <= IdentityId::cor36;
}

bool is_table(IdentityId id)
{
    return id >= IdentityId::tbl21_B;
}

} // namespace

IdentityPoint normalize_point(IdentityId id, IdentityPoint pt)
{
    const auto& desc = describe(id);
    if (desc.classical) {
        const auto p = classical_params(*desc.classical, pt.family.m, pt.family.lambda, pt.family.base);
        pt.family.mu = p.mu;
        pt.family.nu = p.nu;
    }
    if (desc.shapes.size() == 1)
        pt.shape = desc.shapes.front();
    return pt;
}

std::vector<Sides> identity_sides_upto(IdentityId id, const IdentityPoint& pt, unsigned n_max)
{
    return evaluate(describe(id), normalize_point(id, pt), n_max);
}

Sides identity_sides(IdentityId id, const IdentityPoint& pt)
{
    return identity_sides_upto(id, pt, pt.n).back();
}

Sides thm21_sides(const IdentityPoint& pt)
{
    return identity_sides(IdentityId::thm21, pt);
}

Sides thm22_sides(const IdentityPoint& pt)
{
    return identity_sides(IdentityId::thm22, pt);
}

Sides corollary_sides(IdentityId id, const IdentityPoint& pt)
{
    if (!is_corollary(id))
        throw UsageError(describe(id).tag + " is not a corollary identity");
    return identity_sides(id, pt);
}

Sides table_sides(IdentityId id, const IdentityPoint& pt)
{
    if (!is_table(id))
        throw UsageError(describe(id).tag + " is not a table identity");
    return identity_sides(id, pt);
}

VerificationReport verify_grid(IdentityId id, const std::vector<IdentityPoint>& grid, unsigned threads)
{
    VerificationReport report;
    report.identity = id;
    report.results.resize(grid.size());

    // Points differing only in n share one evaluation.
    auto group_less = [](const IdentityPoint& a, const IdentityPoint& b) {
        IdentityPoint a0 = a;
        IdentityPoint b0 = b;
        a0.n = 0;
        b0.n = 0;
        return point_less(a0, b0);
    };
    std::map<IdentityPoint, std::vector<std::size_t>, decltype(group_less)> groups(group_less);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        report.results[i].point = normalize_point(id, grid[i]);
        groups[report.results[i].point].push_back(i);
    }
    std::vector<const std::vector<std::size_t>*> work;
    work.reserve(groups.size());
    for (const auto& [key, members] : groups)
        work.push_back(&members);

    const auto& desc = describe(id);
    auto run_group = [&](const std::vector<std::size_t>& members) {
        unsigned n_max = 0;
        for (auto i : members)
            n_max = std::max(n_max, report.results[i].point.n);
        try {
            const auto sides = evaluate(desc, report.results[members.front()].point, n_max);
            for (auto i : members) {
                auto& r = report.results[i];
                r.lhs = sides[r.point.n].lhs;
                r.rhs = sides[r.point.n].rhs;
                r.outcome = *r.lhs == *r.rhs ? Outcome::pass : Outcome::fail;
            }
        } catch (const std::exception& ex) {
            for (auto i : members) {
                report.results[i].outcome = Outcome::error;
                report.results[i].error = ex.what();
            }
        }
    };

    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(work.size())));
    if (threads <= 1) {
        for (const auto* members : work)
            run_group(*members);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t g = next++; g < work.size(); g = next++)
                    run_group(*work[g]);
            });
    }

    std::stable_sort(report.results.begin(), report.results.end(),
                     [](const PointResult& a, const PointResult& b) { return point_less(a.point, b.point); });
    report.total = report.results.size();
    for (const auto& r : report.results) {
        switch (r.outcome) {
        case Outcome::pass: ++report.passed; break;
        case Outcome::fail: ++report.failed; break;
        case Outcome::error: ++report.errored; break;
        }
    }
    return report;
}

namespace {

std::vector<Base> all_bases()
{
    std::vector<Base> out{{BaseKind::unit, 1}, {BaseKind::exp, 1}};
    for (auto kind : {BaseKind::gould_hopper, BaseKind::laguerre, BaseKind::trunc_exp})
        for (unsigned s = 1; s <= 3; ++s)
            out.push_back({kind, s});
    return out;
}

std::vector<Base> bases_for(const IdentityDescriptor& desc)
{
    if (!desc.base)
        return all_bases();
    std::vector<Base> out;
    for (unsigned s = 1; s <= 3; ++s)
        out.push_back({*desc.base, s});
    return out;
}

std::vector<Rational> lambdas_for(const IdentityDescriptor& desc)
{
    if (desc.lambda_one)
        return {Rational(1)};
    std::vector<Rational> out{Rational(2), Rational(1, 2), Rational(-2), Rational(3)};
    // Special-family rows of the base-specific tables also cover the
    // classical lambda = 1 members.
    if (desc.classical && desc.base)
        out.emplace_back(1);
    return out;
}

std::vector<std::pair<unsigned, unsigned>> cd_pairs(Shape shape, const IdentityDescriptor& desc)
{
    std::vector<std::pair<unsigned, unsigned>> out;
    const std::vector<unsigned> values =
        shape == Shape::power_sum ? std::vector<unsigned>{1, 2, 3} : std::vector<unsigned>{1, 3, 5};
    // The M_l(c-1; lambda) rows agree with S_l(c-1; -lambda) only for odd c,
    // so their power-sum form is symmetric only when c and d share parity.
    const bool same_parity = shape == Shape::power_sum && desc.classical &&
                             (*desc.classical == Classical::euler || *desc.classical == Classical::genocchi);
    for (auto c : values)
        for (auto d : values)
            if (!same_parity || c % 2 == d % 2)
                out.emplace_back(c, d);
    return out;
}

} // namespace

std::vector<IdentityPoint> default_grid(IdentityId id)
{
    const auto& desc = describe(id);
    const SamplePoint sample;

    std::vector<std::pair<int, unsigned>> mu_nu{{1, 0}, {1, 1}, {0, 1}};
    if (desc.classical)
        mu_nu = {{0, 0}}; // fixed by the row in normalize_point

    std::vector<IdentityPoint> grid;
    for (Shape shape : desc.shapes)
        for (const auto& base : bases_for(desc))
            for (const auto& lambda : lambdas_for(desc))
                for (auto [mu, nu] : mu_nu)
                    for (unsigned m = 1; m <= 3; ++m)
                        for (auto [c, d] : cd_pairs(shape, desc))
                            for (unsigned n = 0; n <= 8; ++n) {
                                IdentityPoint pt;
                                pt.shape = shape;
                                pt.n = n;
                                pt.c = c;
                                pt.d = d;
                                pt.family = {m, lambda, mu, nu, base};
                                pt.x = sample.x;
                                pt.y = sample.y;
                                pt.X = sample.X;
                                pt.Y = sample.Y;
                                grid.push_back(normalize_point(id, pt));
                            }
    return grid;
}

} // namespace apx
