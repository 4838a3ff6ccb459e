#pragma once

#include "apx/families.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace apx {

enum class IdentityId {
    thm21, thm22,
    cor31, cor32, cor33, cor34, cor35, cor36,
    tbl21_B, tbl21_E, tbl21_G,
    tbl22_B, tbl22_E, tbl22_G,
    tbl31_B, tbl31_E, tbl31_G,
    tbl32_B, tbl32_E, tbl32_G,
    tbl33_B, tbl33_E, tbl33_G,
};

/// Two shapes of symmetry identity.
///  power_sum: sum_k C(n,k) c^(n-k) d^(nu+k) F^(m)_(n-k)(dx, d^e y)
///                 sum_l C(k,l) P_l(c-1) F^(m-1)_(k-l)(cX, c^e Y)
///  geometric: sum_k C(n,k) sum_{i<c} sum_{j<d} w^(i+j) c^k d^(n-k)
///                 F^(m)_k(dx + (d/c) i, d^e y) F^(m)_(n-k)(cX + (c/d) j, c^e Y)
/// with e the base scaling exponent. The right side is the left side with
/// c and d exchanged.
enum class Shape { power_sum, geometric };

const char* shape_name(Shape shape);
Shape parse_shape(std::string_view name);

struct IdentityDescriptor {
    IdentityId id;
    std::string tag;
    std::vector<Shape> shapes;
    /// Empty for the unified family, otherwise the special family of the row.
    std::optional<Classical> classical;
    /// Base the identity is stated for; nullopt means any base.
    std::optional<BaseKind> base;
    /// Only lambda = 1 instances (the classical polynomials).
    bool lambda_one = false;
    std::string title;
    std::string substitution;
};

/// All identities, sorted by tag.
const std::vector<IdentityDescriptor>& identity_catalog();
const IdentityDescriptor& describe(IdentityId id);
/// Throws UsageError for an unknown tag.
IdentityId parse_identity(std::string_view tag);

struct IdentityPoint {
    Shape shape = Shape::power_sum;
    unsigned n = 0;
    unsigned c = 1;
    unsigned d = 1;
    /// m, lambda, mu, nu and base. For special-family rows lambda is the
    /// row's own parameter and mu, nu are fixed by the row.
    FamilyParams family{};
    Rational x{0}, y{0}, X{0}, Y{0};

    friend bool operator==(const IdentityPoint&, const IdentityPoint&) = default;
};

/// Deterministic ordering used for reports.
bool point_less(const IdentityPoint& a, const IdentityPoint& b);

struct Sides {
    Rational lhs;
    Rational rhs;
};

Sides thm21_sides(const IdentityPoint& pt);
Sides thm22_sides(const IdentityPoint& pt);
/// cor31..cor36. Throws UsageError for other tags or a base that does not
/// match the corollary.
Sides corollary_sides(IdentityId id, const IdentityPoint& pt);
/// Table rows. Throws UsageError for non-table tags.
Sides table_sides(IdentityId id, const IdentityPoint& pt);
/// Dispatches on the tag.
Sides identity_sides(IdentityId id, const IdentityPoint& pt);

/// Both sides for every n in 0..n_max at one point (pt.n is ignored).
std::vector<Sides> identity_sides_upto(IdentityId id, const IdentityPoint& pt, unsigned n_max);

/// Fills in the fields a tag fixes (mu and nu of special-family rows).
IdentityPoint normalize_point(IdentityId id, IdentityPoint pt);

enum class Outcome { pass, fail, error };

const char* outcome_name(Outcome outcome);

struct PointResult {
    IdentityPoint point;
    std::optional<Rational> lhs;
    std::optional<Rational> rhs;
    Outcome outcome = Outcome::error;
    std::string error;

    [[nodiscard]] bool pass() const { return outcome == Outcome::pass; }
};

struct VerificationReport {
    IdentityId identity{};
    std::vector<PointResult> results;
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t errored = 0;

    [[nodiscard]] bool all_pass() const { return failed == 0 && errored == 0; }
};

/// Evaluates both sides at every point. Per-point errors are recorded, not
/// thrown. Results come back sorted by point_less whatever the thread count.
VerificationReport verify_grid(IdentityId id, const std::vector<IdentityPoint>& grid, unsigned threads = 1);

/// Sample evaluation point shared by every default grid.
struct SamplePoint {
    Rational x{1, 2};
    Rational y{1, 3};
    Rational X{1, 5};
    Rational Y{2, 7};
};

/// Compiled-in default grid for a tag.
std::vector<IdentityPoint> default_grid(IdentityId id);

} // namespace apx
