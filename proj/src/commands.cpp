#include "apx/commands.hpp"

namespace apx {

namespace {

template <CoefficientRing R>
std::vector<std::string> render_entries(const PolySeq<R>& values)
{
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& v : values)
        out.push_back(v.str());
    return out;
}

template <CoefficientRing R>
PolySeq<R> compute(const ExpandSpec& spec, const R& x, const R& y)
{
    if (spec.family == "atp")
        return atp_sequence(spec.params, x, y, spec.n);
    const auto& p = spec.params;
    return classical_reduce(parse_classical(spec.family), p.m, p.lambda, x, y, p.base, spec.n);
}

} // namespace

Expansion expand(const ExpandSpec& spec)
{
    Expansion out;
    out.spec = spec;
    out.symbolic = !spec.x || !spec.y;
    if (out.symbolic) {
        const PolyXY x = spec.x ? PolyXY(*spec.x) : PolyXY::var(Var::x);
        const PolyXY y = spec.y ? PolyXY(*spec.y) : PolyXY::var(Var::y);
        out.entries = render_entries(compute(spec, x, y));
    } else {
        out.entries = render_entries(compute(spec, *spec.x, *spec.y));
    }
    return out;
}

std::string SumSpec::kind_name() const
{
    const char* base = kind == SumKind::S ? "S" : "M";
    return generalized ? std::string("gen") + base : std::string(base);
}

SumSpec SumSpec::parse_kind(std::string_view name)
{
    SumSpec s;
    if (name == "S" || name == "genS")
        s.kind = SumKind::S;
    else if (name == "M" || name == "genM")
        s.kind = SumKind::M;
    else
        throw UsageError("unknown sum kind '" + std::string(name) + "' (expected S, M, genS or genM)");
    s.generalized = name.starts_with("gen");
    return s;
}

SumResult compute_sum(const SumSpec& spec)
{
    SumResult r;
    r.spec = spec;
    r.value = spec.generalized ? gen_power_sum(spec.kind, spec.k, spec.n, spec.lambda)
                               : power_sum_direct(spec.kind, spec.k, spec.n);
    return r;
}

} // namespace apx
