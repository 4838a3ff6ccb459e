// Command-line front end. Talks to the library only through the C API.

#include "apx/apx.h"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

struct ContextDeleter {
    void operator()(apx_context* c) const { apx_context_free(c); }
};
struct SequenceDeleter {
    void operator()(apx_sequence* s) const { apx_sequence_free(s); }
};
struct ScalarDeleter {
    void operator()(apx_scalar* s) const { apx_scalar_free(s); }
};
struct ReportDeleter {
    void operator()(apx_report* r) const { apx_report_free(r); }
};

constexpr int kExitUsage = APX_ERR_USAGE;

int fail(apx_status status, const apx_context* ctx, const std::string& what)
{
    std::cerr << "apx: " << what << ": " << apx_last_error(ctx) << "\n";
    return status;
}

int emit(const char* text, const std::string& output_path)
{
    if (!text) {
        std::cerr << "apx: rendering failed\n";
        return APX_ERR_INTERNAL;
    }
    if (output_path.empty()) {
        std::cout << text;
        std::cout.flush();
        return 0;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
        std::cerr << "apx: cannot write " << output_path << "\n";
        return kExitUsage;
    }
    out << text;
    return 0;
}

unsigned threads_from_env()
{
    const char* env = std::getenv("APX_THREADS");
    if (!env || !*env)
        return 0;
    try {
        return static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
        return 0;
    }
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Apostol-type polynomial families, power sums and symmetry identity checks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "apx 1.0.0");

    std::string format_name;
    std::string output_path;

    // expand
    auto* expand = app.add_subcommand("expand", "Coefficient table F_0..F_n of one family");
    std::string family = "atp";
    unsigned m = 1;
    std::string lambda = "1";
    int mu = 1;
    unsigned nu = 0;
    std::string base = "unit";
    unsigned degree = 1;
    std::string x_arg = "sym";
    std::string y_arg = "sym";
    unsigned n = 0;
    expand->add_option("--family", family, "atp, bernoulli, euler or genocchi")
        ->check(CLI::IsMember({"atp", "bernoulli", "euler", "genocchi"}));
    expand->add_option("--m", m, "Order m");
    expand->add_option("--lambda", lambda, "Rational lambda, p or p/q");
    expand->add_option("--mu", mu, "Exponent of 2 in the kernel (atp only)");
    expand->add_option("--nu", nu, "Exponent of t in the kernel (atp only)");
    expand->add_option("--base", base, "unit, exp, gould_hopper, laguerre or trunc_exp")
        ->check(CLI::IsMember({"unit", "exp", "gould_hopper", "laguerre", "trunc_exp"}));
    expand->add_option("--degree,--s,--r", degree, "Base degree s or r");
    expand->add_option("--x", x_arg, "Rational x, or sym");
    expand->add_option("--y", y_arg, "Rational y, or sym");
    expand->add_option("--n", n, "Largest index")->required();
    expand->add_option("--format", format_name, "json, csv or text")->default_str("json");
    expand->add_option("--output,-o", output_path, "Write to a file instead of stdout");

    // sums
    auto* sums = app.add_subcommand("sums", "Power sums and their generalized versions");
    std::string kind;
    unsigned k = 0;
    unsigned sum_n = 0;
    std::string sum_lambda;
    sums->add_option("--kind", kind, "S, M, genS or genM")
        ->required()
        ->check(CLI::IsMember({"S", "M", "genS", "genM"}));
    sums->add_option("--k", k, "Power k")->required();
    sums->add_option("--n", sum_n, "Upper summation index n")->required();
    sums->add_option("--lambda", sum_lambda, "Rational lambda (genS, genM)");
    sums->add_option("--format", format_name, "json, csv or text")->default_str("text");
    sums->add_option("--output,-o", output_path, "Write to a file instead of stdout");

    // verify
    auto* verify = app.add_subcommand("verify", "Check a symmetry identity over a grid of points");
    std::string identity;
    std::string grid = "default";
    std::string grid_file;
    bool failures_only = false;
    verify->add_option("--identity", identity, "Identity tag (see list)")->required();
    auto* grid_opt = verify->add_option("--grid", grid, "\"default\" or an inline JSON array of points");
    verify->add_option("--grid-file", grid_file, "JSON file holding an array of points")->excludes(grid_opt);
    verify->add_flag("--failures-only", failures_only, "Only emit failing and errored points");
    verify->add_option("--format", format_name, "json, csv or text")->default_str("json");
    verify->add_option("--output,-o", output_path, "Write to a file instead of stdout");

    // list
    auto* list = app.add_subcommand("list", "Identity catalog");
    list->add_option("--format", format_name, "json, csv or text")->default_str("text");
    list->add_option("--output,-o", output_path, "Write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    std::unique_ptr<apx_context, ContextDeleter> ctx(apx_context_new());
    if (!ctx) {
        std::cerr << "apx: out of memory\n";
        return APX_ERR_INTERNAL;
    }
    apx_context_set_threads(ctx.get(), threads_from_env());

    if (format_name.empty())
        format_name = verify->parsed() || expand->parsed() ? "json" : "text";
    apx_format format{};
    if (apx_parse_format(format_name.c_str(), &format) != APX_OK) {
        std::cerr << "apx: unknown format '" << format_name << "'\n";
        return kExitUsage;
    }

    if (expand->parsed()) {
        const apx_family_spec spec{family.c_str(), m,    lambda.c_str(), mu, nu, base.c_str(), degree,
                                   x_arg.c_str(),  y_arg.c_str()};
        apx_sequence* raw = nullptr;
        const apx_status status = apx_expand(ctx.get(), &spec, n, &raw);
        if (status != APX_OK)
            return fail(status, ctx.get(), "expand");
        std::unique_ptr<apx_sequence, SequenceDeleter> seq(raw);
        return emit(apx_sequence_render(seq.get(), format), output_path);
    }

    if (sums->parsed()) {
        apx_scalar* raw = nullptr;
        const apx_status status =
            apx_power_sum(ctx.get(), kind.c_str(), k, sum_n, sum_lambda.empty() ? nullptr : sum_lambda.c_str(), &raw);
        if (status != APX_OK)
            return fail(status, ctx.get(), "sums");
        std::unique_ptr<apx_scalar, ScalarDeleter> value(raw);
        return emit(apx_scalar_render(value.get(), format), output_path);
    }

    if (verify->parsed()) {
        std::string grid_text;
        const char* grid_json = nullptr;
        try {
            if (!grid_file.empty())
                grid_text = read_file(grid_file);
            else if (grid != "default")
                grid_text = grid;
        } catch (const std::exception& ex) {
            std::cerr << "apx: " << ex.what() << "\n";
            return kExitUsage;
        }
        if (!grid_file.empty() || grid != "default")
            grid_json = grid_text.c_str();

        apx_report* raw = nullptr;
        const apx_status status = apx_verify(ctx.get(), identity.c_str(), grid_json, &raw);
        if (!raw)
            return fail(status, ctx.get(), "verify");
        std::unique_ptr<apx_report, ReportDeleter> report(raw);
        const int written = emit(apx_report_render(report.get(), format, failures_only ? 1 : 0), output_path);
        if (written != 0)
            return written;
        if (status == APX_VERIFY_FAILED)
            std::cerr << "apx: " << identity << ": " << apx_report_failed(report.get()) << " failed, "
                      << apx_report_errored(report.get()) << " errored of " << apx_report_total(report.get())
                      << "\n";
        return status;
    }

    if (list->parsed())
        return emit(apx_catalog_render(ctx.get(), format), output_path);

    return kExitUsage;
}
