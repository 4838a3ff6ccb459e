#include "apx/serialize.hpp"

#include <json.hpp>

#include <sstream>

namespace apx {

using nlohmann::json;

Format parse_format(std::string_view name)
{
    if (name == "json")
        return Format::json;
    if (name == "csv")
        return Format::csv;
    if (name == "text")
        return Format::text;
    throw UsageError("unknown format '" + std::string(name) + "' (expected json, csv or text)");
}

namespace {

std::string dump(const json& j)
{
    return j.dump(2) + "\n";
}

std::string arg_text(const std::optional<Rational>& v)
{
    return v ? v->str() : "sym";
}

json point_json(const IdentityPoint& p)
{
    return json{
        {"shape", shape_name(p.shape)},
        {"n", p.n},
        {"m", p.family.m},
        {"c", p.c},
        {"d", p.d},
        {"lambda", p.family.lambda.str()},
        {"mu", p.family.mu},
        {"nu", p.family.nu},
        {"base", p.family.base.name()},
        {"degree", p.family.base.degree},
        {"x", p.x.str()},
        {"y", p.y.str()},
        {"X", p.X.str()},
        {"Y", p.Y.str()},
    };
}

} // namespace

std::string render(const Expansion& e, Format format)
{
    const auto& p = e.spec.params;
    switch (format) {
    case Format::json: {
        json j{
            {"schema", kSchemaVersion},
            {"command", "expand"},
            {"family", e.spec.family},
            {"m", p.m},
            {"lambda", p.lambda.str()},
            {"base", p.base.name()},
            {"degree", p.base.degree},
            {"x", arg_text(e.spec.x)},
            {"y", arg_text(e.spec.y)},
            {"n", e.spec.n},
            {"mode", e.symbolic ? "symbolic" : "numeric"},
            {"entries", e.entries},
        };
        if (e.spec.family == "atp") {
            j["mu"] = p.mu;
            j["nu"] = p.nu;
        }
        return dump(j);
    }
    case Format::csv: {
        std::string out = e.symbolic ? "n,polynomial\n" : "n,value\n";
        for (std::size_t n = 0; n < e.entries.size(); ++n)
            out += std::to_string(n) + "," + e.entries[n] + "\n";
        return out;
    }
    case Format::text: {
        std::string out;
        for (std::size_t n = 0; n < e.entries.size(); ++n)
            out += "F_" + std::to_string(n) + " = " + e.entries[n] + "\n";
        return out;
    }
    }
    return {};
}

std::string render(const SumResult& r, Format format)
{
    const auto& s = r.spec;
    switch (format) {
    case Format::json: {
        json j{{"schema", kSchemaVersion}, {"command", "sums"}, {"kind", s.kind_name()},
               {"k", s.k},         {"n", s.n},            {"value", r.value.str()}};
        if (s.generalized)
            j["lambda"] = s.lambda.str();
        return dump(j);
    }
    case Format::csv:
        return "kind,k,n,lambda,value\n" + s.kind_name() + "," + std::to_string(s.k) + "," + std::to_string(s.n) +
               "," + (s.generalized ? s.lambda.str() : "") + "," + r.value.str() + "\n";
    case Format::text:
        return r.value.str() + "\n";
    }
    return {};
}

std::string render(const VerificationReport& report, Format format, bool failures_only)
{
    const auto& tag = describe(report.identity).tag;
    switch (format) {
    case Format::json: {
        json points = json::array();
        for (const auto& r : report.results) {
            if (failures_only && r.pass())
                continue;
            json entry{
                {"point", point_json(r.point)},
                {"lhs", r.lhs ? json(r.lhs->str()) : json(nullptr)},
                {"rhs", r.rhs ? json(r.rhs->str()) : json(nullptr)},
                {"pass", r.pass()},
                {"status", outcome_name(r.outcome)},
            };
            if (r.outcome == Outcome::error)
                entry["error"] = r.error;
            points.push_back(std::move(entry));
        }
        return dump(json{
            {"schema", kSchemaVersion},
            {"identity", tag},
            {"points", std::move(points)},
            {"summary",
             {{"total", report.total}, {"passed", report.passed}, {"failed", report.failed},
              {"errored", report.errored}}},
        });
    }
    case Format::csv: {
        std::string out = "shape,base,degree,m,mu,nu,lambda,c,d,n,x,y,X,Y,lhs,rhs,status\n";
        for (const auto& r : report.results) {
            if (failures_only && r.pass())
                continue;
            const auto& p = r.point;
            std::ostringstream line;
            line << shape_name(p.shape) << ',' << p.family.base.name() << ',' << p.family.base.degree << ','
                 << p.family.m << ',' << p.family.mu << ',' << p.family.nu << ',' << p.family.lambda.str() << ','
                 << p.c << ',' << p.d << ',' << p.n << ',' << p.x.str() << ',' << p.y.str() << ',' << p.X.str()
                 << ',' << p.Y.str() << ',' << (r.lhs ? r.lhs->str() : "") << ','
                 << (r.rhs ? r.rhs->str() : "") << ',' << outcome_name(r.outcome) << '\n';
            out += line.str();
        }
        return out;
    }
    case Format::text: {
        std::ostringstream out;
        out << tag << ": " << report.total << " points, " << report.passed << " passed, " << report.failed
            << " failed, " << report.errored << " errored\n";
        for (const auto& r : report.results) {
            if (r.pass())
                continue;
            out << "  " << outcome_name(r.outcome) << ' ' << point_json(r.point).dump();
            if (r.outcome == Outcome::error)
                out << ": " << r.error;
            else
                out << ": lhs=" << r.lhs->str() << " rhs=" << r.rhs->str();
            out << '\n';
        }
        return out.str();
    }
    }
    return {};
}

std::string render_catalog(Format format)
{
    const auto& catalog = identity_catalog();
    switch (format) {
    case Format::json: {
        json arr = json::array();
        for (const auto& d : catalog) {
            json shapes = json::array();
            for (auto s : d.shapes)
                shapes.push_back(shape_name(s));
            arr.push_back(json{
                {"tag", d.tag},
                {"title", d.title},
                {"shapes", shapes},
                {"family", d.classical ? classical_name(*d.classical) : "apostol_type"},
                {"base", d.base ? Base{*d.base, 1}.name() : "any"},
                {"lambda_one", d.lambda_one},
                {"substitution", d.substitution},
            });
        }
        return dump(arr);
    }
    case Format::csv: {
        std::string out = "tag,family,base,shapes,title\n";
        for (const auto& d : catalog) {
            std::string shapes;
            for (auto s : d.shapes)
                shapes += (shapes.empty() ? "" : "+") + std::string(shape_name(s));
            out += d.tag + "," + (d.classical ? classical_name(*d.classical) : "apostol_type") + "," +
                   (d.base ? Base{*d.base, 1}.name() : "any") + "," + shapes + "," + d.title + "\n";
        }
        return out;
    }
    case Format::text: {
        std::string out;
        for (const auto& d : catalog) {
            std::string tag = d.tag;
            tag.resize(10, ' ');
            out += tag + d.title + "\n          " + d.substitution + "\n";
        }
        return out;
    }
    }
    return {};
}

namespace {

Rational rational_field(const json& obj, const char* key)
{
    const auto& v = obj.at(key);
    if (v.is_number_integer())
        return Rational(v.get<long>());
    if (v.is_string())
        return Rational::parse(v.get<std::string>());
    throw UsageError(std::string("field '") + key + "' must be an integer or a \"p/q\" string");
}

template <class T>
T integer_field(const json& obj, const char* key)
{
    const auto& v = obj.at(key);
    if (!v.is_number_integer())
        throw UsageError(std::string("field '") + key + "' must be an integer");
    if constexpr (std::is_unsigned_v<T>) {
        if (v.get<long long>() < 0)
            throw UsageError(std::string("field '") + key + "' must be nonnegative");
    }
    return v.get<T>();
}

} // namespace

std::vector<IdentityPoint> parse_grid(std::string_view json_text, IdentityId id)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& ex) {
        throw UsageError(std::string("grid is not valid JSON: ") + ex.what());
    }
    if (!doc.is_array())
        throw UsageError("grid must be a JSON array of points");

    const auto& desc = describe(id);
    const SamplePoint sample;
    std::vector<IdentityPoint> grid;
    for (const auto& obj : doc) {
        if (!obj.is_object())
            throw UsageError("grid entries must be JSON objects");
        try {
            IdentityPoint p;
            p.shape = obj.contains("shape") ? parse_shape(obj.at("shape").get<std::string>()) : desc.shapes.front();
            p.n = integer_field<unsigned>(obj, "n");
            p.c = integer_field<unsigned>(obj, "c");
            p.d = integer_field<unsigned>(obj, "d");
            p.family.m = integer_field<unsigned>(obj, "m");
            p.family.lambda = rational_field(obj, "lambda");
            p.family.mu = obj.contains("mu") ? integer_field<int>(obj, "mu") : 1;
            p.family.nu = obj.contains("nu") ? integer_field<unsigned>(obj, "nu") : 0;
            const std::string base_name = obj.contains("base")
                                              ? obj.at("base").get<std::string>()
                                              : (desc.base ? Base{*desc.base, 1}.name() : std::string("unit"));
            const unsigned degree = obj.contains("degree") ? integer_field<unsigned>(obj, "degree") : 1;
            p.family.base = Base::parse(base_name, degree);
            p.x = obj.contains("x") ? rational_field(obj, "x") : sample.x;
            p.y = obj.contains("y") ? rational_field(obj, "y") : sample.y;
            p.X = obj.contains("X") ? rational_field(obj, "X") : sample.X;
            p.Y = obj.contains("Y") ? rational_field(obj, "Y") : sample.Y;
            grid.push_back(normalize_point(id, p));
        } catch (const json::exception& ex) {
            throw UsageError(std::string("bad grid point: ") + ex.what());
        }
    }
    return grid;
}

} // namespace apx
