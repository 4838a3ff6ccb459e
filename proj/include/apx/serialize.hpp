#pragma once

#include "apx/commands.hpp"
#include "apx/identities.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace apx {

enum class Format { json, csv, text };

Format parse_format(std::string_view name);

inline constexpr int kSchemaVersion = 1;

// All renderers are deterministic: rationals are written as "p/q" or "p",
// JSON object keys are sorted, every output ends with a newline.

std::string render(const Expansion& expansion, Format format);
std::string render(const SumResult& result, Format format);
std::string render(const VerificationReport& report, Format format, bool failures_only = false);
std::string render_catalog(Format format);

/// Parses a JSON array of points. Each object needs n, m, c, d and lambda;
/// shape, mu, nu, base, degree, x, y, X, Y default from the identity and the
/// sample point. Rationals may be JSON integers or "p/q" strings.
std::vector<IdentityPoint> parse_grid(std::string_view json_text, IdentityId id);

} // namespace apx
