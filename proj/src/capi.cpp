#include "apx/apx.h"

#include "apx/commands.hpp"
#include "apx/serialize.hpp"

#include <memory>
#include <string>
#include <thread>
#include <vector>

struct apx_context {
    unsigned threads = 0;
    std::string last_error;
    std::string catalog_text;
};

struct apx_sequence {
    apx::Expansion expansion;
    std::string rendered;
};

struct apx_scalar {
    apx::SumResult result;
    std::string value;
    std::string rendered;
};

struct apx_report {
    apx::VerificationReport report;
    std::vector<std::string> lhs;
    std::vector<std::string> rhs;
    std::string rendered;
};

namespace {

// Runs body, translating exceptions into status codes and the context's
// last-error message.
template <class F>
apx_status guarded(apx_context* ctx, F&& body)
{
    if (ctx)
        ctx->last_error.clear();
    try {
        return body();
    } catch (const apx::UsageError& ex) {
        if (ctx)
            ctx->last_error = ex.what();
        return APX_ERR_USAGE;
    } catch (const apx::DomainError& ex) {
        if (ctx)
            ctx->last_error = ex.what();
        return APX_ERR_DOMAIN;
    } catch (const std::exception& ex) {
        if (ctx)
            ctx->last_error = ex.what();
        return APX_ERR_INTERNAL;
    }
}

std::string required(const char* text, const char* what)
{
    if (!text)
        throw apx::UsageError(std::string(what) + " is required");
    return text;
}

std::optional<apx::Rational> argument(const char* text, const char* what)
{
    const std::string s = required(text, what);
    if (s == "sym")
        return std::nullopt;
    return apx::Rational::parse(s);
}

apx::Format to_format(apx_format format)
{
    switch (format) {
    case APX_FORMAT_JSON: return apx::Format::json;
    case APX_FORMAT_CSV: return apx::Format::csv;
    case APX_FORMAT_TEXT: return apx::Format::text;
    }
    throw apx::UsageError("unknown output format");
}

} // namespace

extern "C" {

apx_context* apx_context_new(void)
{
    return new (std::nothrow) apx_context{};
}

void apx_context_free(apx_context* ctx)
{
    delete ctx;
}

void apx_context_set_threads(apx_context* ctx, unsigned threads)
{
    if (ctx)
        ctx->threads = threads;
}

const char* apx_last_error(const apx_context* ctx)
{
    return ctx ? ctx->last_error.c_str() : "";
}

apx_status apx_parse_format(const char* name, apx_format* out)
{
    return guarded(nullptr, [&] {
        switch (apx::parse_format(required(name, "format"))) {
        case apx::Format::json: *out = APX_FORMAT_JSON; break;
        case apx::Format::csv: *out = APX_FORMAT_CSV; break;
        case apx::Format::text: *out = APX_FORMAT_TEXT; break;
        }
        return APX_OK;
    });
}

apx_status apx_expand(apx_context* ctx, const apx_family_spec* spec, unsigned n, apx_sequence** out)
{
    return guarded(ctx, [&] {
        if (!spec || !out)
            throw apx::UsageError("apx_expand needs a spec and an output handle");
        apx::ExpandSpec s;
        s.family = required(spec->family, "family");
        if (s.family != "atp")
            apx::parse_classical(s.family);
        s.params.m = spec->m;
        s.params.lambda = apx::Rational::parse(required(spec->lambda, "lambda"));
        s.params.mu = spec->mu;
        s.params.nu = spec->nu;
        s.params.base = apx::Base::parse(required(spec->base, "base"), spec->degree);
        s.x = argument(spec->x, "x");
        s.y = argument(spec->y, "y");
        s.n = n;
        auto handle = std::make_unique<apx_sequence>();
        handle->expansion = apx::expand(s);
        *out = handle.release();
        return APX_OK;
    });
}

size_t apx_sequence_size(const apx_sequence* seq)
{
    return seq ? seq->expansion.entries.size() : 0;
}

const char* apx_sequence_entry(const apx_sequence* seq, size_t index)
{
    if (!seq || index >= seq->expansion.entries.size())
        return nullptr;
    return seq->expansion.entries[index].c_str();
}

int apx_sequence_is_symbolic(const apx_sequence* seq)
{
    return seq && seq->expansion.symbolic ? 1 : 0;
}

const char* apx_sequence_render(apx_sequence* seq, apx_format format)
{
    if (!seq)
        return nullptr;
    try {
        seq->rendered = apx::render(seq->expansion, to_format(format));
    } catch (const std::exception&) {
        return nullptr;
    }
    return seq->rendered.c_str();
}

void apx_sequence_free(apx_sequence* seq)
{
    delete seq;
}

apx_status apx_power_sum(apx_context* ctx, const char* kind, unsigned k, unsigned n, const char* lambda,
                         apx_scalar** out)
{
    return guarded(ctx, [&] {
        if (!out)
            throw apx::UsageError("apx_power_sum needs an output handle");
        auto spec = apx::SumSpec::parse_kind(required(kind, "kind"));
        spec.k = k;
        spec.n = n;
        if (spec.generalized)
            spec.lambda = apx::Rational::parse(required(lambda, "lambda"));
        auto handle = std::make_unique<apx_scalar>();
        handle->result = apx::compute_sum(spec);
        handle->value = handle->result.value.str();
        *out = handle.release();
        return APX_OK;
    });
}

const char* apx_scalar_value(const apx_scalar* value)
{
    return value ? value->value.c_str() : nullptr;
}

const char* apx_scalar_render(apx_scalar* value, apx_format format)
{
    if (!value)
        return nullptr;
    try {
        value->rendered = apx::render(value->result, to_format(format));
    } catch (const std::exception&) {
        return nullptr;
    }
    return value->rendered.c_str();
}

void apx_scalar_free(apx_scalar* value)
{
    delete value;
}

apx_status apx_verify(apx_context* ctx, const char* identity, const char* grid_json, apx_report** out)
{
    return guarded(ctx, [&] {
        if (!out)
            throw apx::UsageError("apx_verify needs an output handle");
        const auto id = apx::parse_identity(required(identity, "identity"));
        const auto grid = grid_json ? apx::parse_grid(grid_json, id) : apx::default_grid(id);
        unsigned threads = ctx ? ctx->threads : 1;
        if (threads == 0)
            threads = std::max(1u, std::thread::hardware_concurrency());

        auto handle = std::make_unique<apx_report>();
        handle->report = apx::verify_grid(id, grid, threads);
        for (const auto& r : handle->report.results) {
            handle->lhs.push_back(r.lhs ? r.lhs->str() : std::string());
            handle->rhs.push_back(r.rhs ? r.rhs->str() : std::string());
        }
        const bool ok = handle->report.all_pass();
        *out = handle.release();
        return ok ? APX_OK : APX_VERIFY_FAILED;
    });
}

size_t apx_report_total(const apx_report* report)
{
    return report ? report->report.total : 0;
}

size_t apx_report_passed(const apx_report* report)
{
    return report ? report->report.passed : 0;
}

size_t apx_report_failed(const apx_report* report)
{
    return report ? report->report.failed : 0;
}

size_t apx_report_errored(const apx_report* report)
{
    return report ? report->report.errored : 0;
}

const char* apx_report_status(const apx_report* report, size_t index)
{
    if (!report || index >= report->report.results.size())
        return nullptr;
    return apx::outcome_name(report->report.results[index].outcome);
}

const char* apx_report_lhs(const apx_report* report, size_t index)
{
    if (!report || index >= report->report.results.size() || !report->report.results[index].lhs)
        return nullptr;
    return report->lhs[index].c_str();
}

const char* apx_report_rhs(const apx_report* report, size_t index)
{
    if (!report || index >= report->report.results.size() || !report->report.results[index].rhs)
        return nullptr;
    return report->rhs[index].c_str();
}

const char* apx_report_render(apx_report* report, apx_format format, int failures_only)
{
    if (!report)
        return nullptr;
    try {
        report->rendered = apx::render(report->report, to_format(format), failures_only != 0);
    } catch (const std::exception&) {
        return nullptr;
    }
    return report->rendered.c_str();
}

void apx_report_free(apx_report* report)
{
    delete report;
}

size_t apx_identity_count(void)
{
    return apx::identity_catalog().size();
}

const char* apx_identity_tag(size_t index)
{
    const auto& catalog = apx::identity_catalog();
    return index < catalog.size() ? catalog[index].tag.c_str() : nullptr;
}

const char* apx_catalog_render(apx_context* ctx, apx_format format)
{
    if (!ctx)
        return nullptr;
    try {
        ctx->catalog_text = apx::render_catalog(to_format(format));
    } catch (const std::exception& ex) {
        ctx->last_error = ex.what();
        return nullptr;
    }
    return ctx->catalog_text.c_str();
}

} // extern "C"
