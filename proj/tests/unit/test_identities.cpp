#include "apx/identities.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <random>

using apx::Base;
using apx::BaseKind;
using apx::Classical;
using apx::IdentityId;
using apx::IdentityPoint;
using apx::Rational;
using apx::Shape;
using apx::SumKind;
using R = Rational;

namespace {

IdentityPoint point(Shape shape, unsigned n, unsigned m, unsigned c, unsigned d, R lambda, int mu, unsigned nu,
                    Base base, R x = R(1, 2), R y = R(1, 3), R X = R(1, 5), R Y = R(2, 7))
{
    IdentityPoint pt;
    pt.shape = shape;
    pt.n = n;
    pt.c = c;
    pt.d = d;
    pt.family = {m, lambda, mu, nu, base};
    pt.x = x;
    pt.y = y;
    pt.X = X;
    pt.Y = Y;
    return pt;
}

R ipow(long b, unsigned e)
{
    return R(b).pow(e);
}

// Special-family rows written out naively from oracle sequences: no
// factoring of the weights and no shared memoization.
struct RowSpec {
    Classical which;
    SumKind sum;
    R sum_lambda;
    R weight;
    unsigned nu;
};

RowSpec row_for(Classical which, const R& lambda)
{
    switch (which) {
    case Classical::bernoulli: return {which, SumKind::S, lambda, lambda, 1};
    case Classical::euler: return {which, SumKind::M, lambda, -lambda, 0};
    case Classical::genocchi: return {which, SumKind::M, lambda, -lambda, 1};
    }
    return {};
}

R naive_power_sum_side(const RowSpec& row, const IdentityPoint& pt, unsigned c, unsigned d)
{
    const auto& f = pt.family;
    const unsigned e = f.base.scaling_exponent();
    const unsigned n = pt.n;
    const auto a = oracle::classical_direct(row.which, f.m, f.lambda, R(d) * pt.x, ipow(d, e) * pt.y, f.base, n);
    const auto b =
        oracle::classical_direct(row.which, f.m - 1, f.lambda, R(c) * pt.X, ipow(c, e) * pt.Y, f.base, n);
    R total(0);
    for (unsigned k = 0; k <= n; ++k) {
        R inner(0);
        for (unsigned l = 0; l <= k; ++l)
            inner += R(apx::binomial(k, l)) * apx::gen_power_sum(row.sum, l, c - 1, row.sum_lambda) * b[k - l];
        total += R(apx::binomial(n, k)) * ipow(c, n - k) * ipow(d, row.nu + k) * a[n - k] * inner;
    }
    return total;
}

R naive_geometric_side(const RowSpec& row, const IdentityPoint& pt, unsigned c, unsigned d)
{
    const auto& f = pt.family;
    const unsigned e = f.base.scaling_exponent();
    const unsigned n = pt.n;
    R total(0);
    for (unsigned k = 0; k <= n; ++k)
        for (unsigned i = 0; i < c; ++i)
            for (unsigned j = 0; j < d; ++j) {
                const auto a = oracle::classical_direct(row.which, f.m, f.lambda, R(d) * pt.x + R(d, c) * R(i),
                                                        ipow(d, e) * pt.y, f.base, n);
                const auto b = oracle::classical_direct(row.which, f.m, f.lambda, R(c) * pt.X + R(c, d) * R(j),
                                                        ipow(c, e) * pt.Y, f.base, n);
                total += R(apx::binomial(n, k)) * row.weight.pow(i + j) * ipow(c, k) * ipow(d, n - k) * a[k] *
                         b[n - k];
            }
    return total;
}

apx::Sides naive_table_sides(Classical which, const IdentityPoint& pt)
{
    const auto row = row_for(which, pt.family.lambda);
    if (pt.shape == Shape::power_sum)
        return {naive_power_sum_side(row, pt, pt.c, pt.d), naive_power_sum_side(row, pt, pt.d, pt.c)};
    return {naive_geometric_side(row, pt, pt.c, pt.d), naive_geometric_side(row, pt, pt.d, pt.c)};
}

} // namespace

TEST_CASE("catalog")
{
    const auto& cat = apx::identity_catalog();
    CHECK(cat.size() == 23);
    for (std::size_t i = 1; i < cat.size(); ++i)
        CHECK(cat[i - 1].tag < cat[i].tag);
    for (const auto& d : cat) {
        CHECK(apx::parse_identity(d.tag) == d.id);
        CHECK(apx::describe(d.id).tag == d.tag);
    }
    CHECK(apx::describe(IdentityId::tbl21_B).shapes.size() == 2);
    CHECK(apx::describe(IdentityId::tbl22_E).lambda_one);
    CHECK(apx::describe(IdentityId::cor33).base == BaseKind::laguerre);
    CHECK_THROWS_AS(apx::parse_identity("nosuch"), apx::UsageError);
}

TEST_CASE("power-sum shape: trivial cases")
{
    for (const R& lambda : {R(2), R(1, 2), R(-2), R(3)})
        for (unsigned m = 1; m <= 3; ++m)
            for (auto [c, d] : {std::pair{1u, 1u}, {2u, 3u}, {3u, 1u}}) {
                const auto s = apx::thm21_sides(point(Shape::power_sum, 0, m, c, d, lambda, 1, 0, Base{}));
                const R expected = (R(2) / (lambda + R(1))).pow(2 * m - 1);
                CHECK(s.lhs == expected);
                CHECK(s.rhs == expected);
            }
    for (unsigned c = 1; c <= 3; ++c) {
        const auto s = apx::thm21_sides(point(Shape::power_sum, 6, 2, c, c, R(5, 3), 1, 1, Base{BaseKind::exp, 1}));
        CHECK(s.lhs == s.rhs);
    }
}

TEST_CASE("power-sum shape: worked example against the G(t) series")
{
    const auto pt =
        point(Shape::power_sum, 2, 2, 2, 3, R(1, 2), 1, 1, Base{BaseKind::gould_hopper, 2}, R(1, 2), R(1, 3), R(1, 5),
              R(2));
    const auto s = apx::thm21_sides(pt);
    CHECK(s.lhs == s.rhs);
    CHECK(s.lhs == oracle::g_series_sides(pt, 2)[2]);
}

TEST_CASE("geometric shape: trivial and worked cases")
{
    const auto p1 = point(Shape::geometric, 5, 2, 1, 1, R(3), 1, 0, Base{BaseKind::laguerre, 2});
    const auto s1 = apx::thm22_sides(p1);
    const auto fa = apx::atp_sequence(p1.family, p1.x, p1.y, 5);
    const auto fb = apx::atp_sequence(p1.family, p1.X, p1.Y, 5);
    R collapsed(0);
    for (unsigned k = 0; k <= 5; ++k)
        collapsed += R(apx::binomial(5, k)) * fa[k] * fb[5 - k];
    CHECK(s1.lhs == collapsed);
    CHECK(s1.rhs == collapsed);

    for (unsigned c : {3u, 5u}) {
        const auto s = apx::thm22_sides(point(Shape::geometric, 4, 1, c, c, R(-2), 0, 1, Base{}));
        CHECK(s.lhs == s.rhs);
    }

    const auto p2 = point(Shape::geometric, 3, 1, 3, 1, R(2), 1, 0, Base{BaseKind::exp, 1}, R(1), R(0), R(1, 2), R(0));
    const auto s2 = apx::thm22_sides(p2);
    CHECK(s2.lhs == s2.rhs);
    CHECK(s2.lhs == oracle::h_series_sides(p2, 3)[3]);
}

TEST_CASE("geometric shape holds for every parity")
{
    // Only the closed form H(t) needs odd c and d; the finite sums are
    // symmetric regardless. Even c, d still disagree with H(t).
    const auto p = point(Shape::geometric, 2, 1, 2, 2, R(2), 1, 0, Base{});
    const auto s = apx::thm22_sides(p);
    CHECK(s.lhs == s.rhs);
    CHECK(s.lhs != oracle::h_series_sides(p, 2)[2]);
    for (auto [c, d] : {std::pair{2u, 4u}, {1u, 2u}, {2u, 3u}, {4u, 5u}}) {
        const auto r = apx::thm22_sides(point(Shape::geometric, 6, 2, c, d, R(1, 2), 1, 1, Base{BaseKind::exp, 1}));
        CHECK(r.lhs == r.rhs);
    }
}

TEST_CASE("corollaries dispatch on their base")
{
    const auto gh = Base{BaseKind::gould_hopper, 2};
    auto pt = point(Shape::power_sum, 0, 2, 2, 3, R(3), 1, 0, gh);
    const auto s = apx::corollary_sides(IdentityId::cor31, pt);
    CHECK(s.lhs == apx::thm21_sides(pt).lhs);
    CHECK(s.lhs == (R(2) / R(4)).pow(3));

    pt = point(Shape::power_sum, 5, 2, 3, 2, R(2), 1, 1, Base{BaseKind::trunc_exp, 1});
    const auto t = apx::corollary_sides(IdentityId::cor35, pt);
    CHECK(t.lhs == apx::thm21_sides(pt).lhs);
    CHECK(t.rhs == apx::thm21_sides(pt).rhs);

    const auto l = apx::corollary_sides(IdentityId::cor33,
                                        point(Shape::power_sum, 2, 1, 2, 1, R(1, 3), 1, 0, Base{BaseKind::laguerre, 2}));
    CHECK(l.lhs == l.rhs);

    CHECK_THROWS_AS(apx::corollary_sides(IdentityId::cor31, point(Shape::power_sum, 1, 1, 1, 1, R(2), 1, 0, Base{})),
                    apx::UsageError);
    CHECK_THROWS_AS(apx::corollary_sides(IdentityId::thm21, pt), apx::UsageError);
}

TEST_CASE("table rows")
{
    const auto te2 = Base{BaseKind::trunc_exp, 2};
    const auto g = apx::table_sides(IdentityId::tbl33_G, point(Shape::power_sum, 2, 1, 1, 3, R(2), 0, 0, te2));
    CHECK(g.lhs == g.rhs);

    // Row I at lambda = 1 is the classical row of the lambda = 1 table.
    for (auto [wide, narrow] : {std::pair{IdentityId::tbl21_B, IdentityId::tbl22_B},
                                {IdentityId::tbl21_E, IdentityId::tbl22_E},
                                {IdentityId::tbl21_G, IdentityId::tbl22_G}}) {
        const auto pt = point(Shape::geometric, 4, 2, 3, 5, R(1), 0, 0, Base{BaseKind::exp, 1});
        const auto a = apx::table_sides(wide, pt);
        const auto b = apx::table_sides(narrow, pt);
        CHECK(a.lhs == b.lhs);
        CHECK(a.rhs == b.rhs);
    }
    CHECK_THROWS_AS(apx::table_sides(IdentityId::tbl22_B, point(Shape::power_sum, 2, 1, 1, 2, R(2), 0, 0, Base{})),
                    apx::UsageError);
    CHECK_THROWS_AS(apx::table_sides(IdentityId::thm21, point(Shape::power_sum, 2, 1, 1, 2, R(2), 0, 0, Base{})),
                    apx::UsageError);
}

TEST_CASE("table rows match a naive assembly from oracle sequences")
{
    const std::vector<std::pair<IdentityId, Classical>> rows{
        {IdentityId::tbl21_B, Classical::bernoulli}, {IdentityId::tbl21_E, Classical::euler},
        {IdentityId::tbl21_G, Classical::genocchi},  {IdentityId::tbl31_B, Classical::bernoulli},
        {IdentityId::tbl32_E, Classical::euler},     {IdentityId::tbl33_G, Classical::genocchi}};
    for (const auto& [id, which] : rows) {
        const auto& desc = apx::describe(id);
        const Base base{desc.base.value_or(BaseKind::exp), 2};
        for (const R& lambda : {R(1), R(2), R(-1, 2)})
            for (unsigned m = 1; m <= 2; ++m) {
                for (auto [c, d] : {std::pair{1u, 3u}, {3u, 3u}, {2u, 2u}}) {
                    auto pt = apx::normalize_point(id, point(Shape::power_sum, 4, m, c, d, lambda, 0, 0, base));
                    const auto got = apx::table_sides(id, pt);
                    const auto want = naive_table_sides(which, pt);
                    CHECK(got.lhs == want.lhs);
                    CHECK(got.rhs == want.rhs);
                    CHECK(got.lhs == got.rhs);
                }
                auto pt = apx::normalize_point(id, point(Shape::geometric, 3, m, 3, 1, lambda, 0, 0, base));
                const auto got = apx::table_sides(id, pt);
                const auto want = naive_table_sides(which, pt);
                CHECK(got.lhs == want.lhs);
                CHECK(got.rhs == want.rhs);
                CHECK(got.lhs == got.rhs);
            }
    }
}

TEST_CASE("M-printed rows need c and d of equal parity")
{
    for (auto id : {IdentityId::tbl21_E, IdentityId::tbl21_G}) {
        const auto s = apx::table_sides(id, point(Shape::power_sum, 3, 1, 1, 2, R(2), 0, 0, Base{}));
        CHECK(s.lhs != s.rhs);
    }
    const auto b = apx::table_sides(IdentityId::tbl21_B, point(Shape::power_sum, 3, 1, 1, 2, R(2), 0, 0, Base{}));
    CHECK(b.lhs == b.rhs);
}

TEST_CASE("exchanging c and d exchanges the sides")
{
    std::mt19937 rng(41);
    for (const auto& desc : apx::identity_catalog()) {
        auto grid = apx::default_grid(desc.id);
        for (int i = 0; i < 10; ++i) {
            auto pt = grid[rng() % grid.size()];
            const auto s = apx::identity_sides(desc.id, pt);
            std::swap(pt.c, pt.d);
            const auto t = apx::identity_sides(desc.id, pt);
            CHECK(s.lhs == t.rhs);
            CHECK(s.rhs == t.lhs);
        }
    }
}

TEST_CASE("sides for a range of n agree with single evaluations")
{
    const auto pt = point(Shape::geometric, 0, 2, 3, 5, R(-2), 1, 1, Base{BaseKind::laguerre, 3});
    const auto all = apx::identity_sides_upto(IdentityId::thm22, pt, 6);
    for (unsigned n = 0; n <= 6; ++n) {
        auto p = pt;
        p.n = n;
        const auto s = apx::thm22_sides(p);
        CHECK(all[n].lhs == s.lhs);
        CHECK(all[n].rhs == s.rhs);
    }
}

TEST_CASE("grid verification")
{
    const auto empty = apx::verify_grid(IdentityId::thm21, {});
    CHECK(empty.total == 0);
    CHECK(empty.passed == 0);
    CHECK(empty.failed == 0);
    CHECK(empty.errored == 0);
    CHECK(empty.all_pass());

    // Bad points become error entries.
    std::vector<IdentityPoint> grid{point(Shape::power_sum, 2, 1, 0, 1, R(2), 1, 0, Base{}),
                                    point(Shape::power_sum, 2, 1, 1, 2, R(-1), 1, 0, Base{}),
                                    point(Shape::power_sum, 2, 0, 1, 2, R(2), 1, 0, Base{}),
                                    point(Shape::power_sum, 2, 1, 1, 2, R(2), 1, 0, Base{})};
    const auto r = apx::verify_grid(IdentityId::thm21, grid);
    CHECK(r.total == 4);
    CHECK(r.errored == 3);
    CHECK(r.passed == 1);
    CHECK_FALSE(r.all_pass());

    // Failures are recorded, not thrown.
    const auto f = apx::verify_grid(IdentityId::tbl21_E, {point(Shape::power_sum, 3, 1, 1, 2, R(2), 0, 0, Base{})});
    CHECK(f.failed == 1);
    CHECK(f.results[0].outcome == apx::Outcome::fail);
    CHECK(f.results[0].lhs.has_value());
}

TEST_CASE("grid verification is ordered and thread independent")
{
    auto grid = apx::default_grid(IdentityId::cor34);
    grid.resize(600);
    std::mt19937 rng(43);
    std::shuffle(grid.begin(), grid.end(), rng);
    const auto one = apx::verify_grid(IdentityId::cor34, grid, 1);
    const auto four = apx::verify_grid(IdentityId::cor34, grid, 4);
    REQUIRE(one.results.size() == four.results.size());
    for (std::size_t i = 0; i < one.results.size(); ++i) {
        CHECK(one.results[i].point == four.results[i].point);
        CHECK(one.results[i].lhs == four.results[i].lhs);
        if (i > 0)
            CHECK_FALSE(apx::point_less(one.results[i].point, one.results[i - 1].point));
    }
    CHECK(one.all_pass());
}

TEST_CASE("default grids")
{
    const auto g21 = apx::default_grid(IdentityId::thm21);
    const auto g22 = apx::default_grid(IdentityId::thm22);
    CHECK(g21.size() == 11 * 4 * 3 * 3 * 9 * 9);
    CHECK(g22.size() == g21.size());
    for (const auto& p : g22)
        CHECK((p.c % 2 == 1 && p.d % 2 == 1));
    for (const auto& p : apx::default_grid(IdentityId::tbl21_G))
        CHECK(p.family.nu == 1);
    for (const auto& p : apx::default_grid(IdentityId::tbl22_B))
        CHECK(p.family.lambda == R(1));
}
