#pragma once

#include "apx/families.hpp"

#include <optional>
#include <string>
#include <vector>

namespace apx {

/// Which sequence to expand and where. A missing x or y means that argument
/// stays symbolic and entries come back as polynomials.
struct ExpandSpec {
    std::string family = "atp"; // atp | bernoulli | euler | genocchi
    FamilyParams params{};      // mu and nu are only read for atp
    std::optional<Rational> x;
    std::optional<Rational> y;
    unsigned n = 0;
};

struct Expansion {
    ExpandSpec spec;
    bool symbolic = false;
    std::vector<std::string> entries;
};

Expansion expand(const ExpandSpec& spec);

struct SumSpec {
    SumKind kind = SumKind::S;
    bool generalized = false;
    unsigned k = 0;
    unsigned n = 0;
    Rational lambda{1};

    /// "S", "M", "genS" or "genM".
    [[nodiscard]] std::string kind_name() const;
    static SumSpec parse_kind(std::string_view name);
};

struct SumResult {
    SumSpec spec;
    Rational value;
};

SumResult compute_sum(const SumSpec& spec);

} // namespace apx
