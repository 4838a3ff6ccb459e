#include "apx/poly.hpp"

#include "apx/error.hpp"

#include <algorithm>

namespace apx {

const char* var_name(Var v)
{
    switch (v) {
    case Var::x: return "x";
    case Var::y: return "y";
    case Var::X: return "X";
    case Var::Y: return "Y";
    }
    return "?";
}

namespace {

std::uint32_t total_degree(const Exponent& e)
{
    std::uint32_t d = 0;
    for (auto k : e)
        d += k;
    return d;
}

} // namespace

bool GradedLess::operator()(const Exponent& a, const Exponent& b) const
{
    const auto da = total_degree(a);
    const auto db = total_degree(b);
    if (da != db)
        return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

PolyXY::PolyXY(const Rational& constant)
{
    if (!constant.is_zero())
        terms_.emplace(Exponent{}, constant);
}

PolyXY PolyXY::var(Var v)
{
    Exponent e{};
    e[static_cast<std::size_t>(v)] = 1;
    return monomial(Rational(1), e);
}

PolyXY PolyXY::monomial(const Rational& coeff, const Exponent& exp)
{
    PolyXY p;
    p.add_term(exp, coeff);
    return p;
}

std::optional<Rational> PolyXY::constant_value() const
{
    if (terms_.empty())
        return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first == Exponent{})
        return terms_.begin()->second;
    return std::nullopt;
}

void PolyXY::add_term(const Exponent& exp, const Rational& coeff)
{
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(exp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

PolyXY& PolyXY::operator+=(const PolyXY& rhs)
{
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, c);
    return *this;
}

PolyXY& PolyXY::operator-=(const PolyXY& rhs)
{
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, -c);
    return *this;
}

PolyXY& PolyXY::operator*=(const PolyXY& rhs)
{
    *this = *this * rhs;
    return *this;
}

PolyXY operator*(const PolyXY& a, const PolyXY& b)
{
    PolyXY out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e{};
            for (std::size_t i = 0; i < kVarCount; ++i)
                e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

PolyXY operator-(const PolyXY& a)
{
    PolyXY out;
    for (const auto& [e, c] : a.terms_)
        out.terms_.emplace(e, -c);
    return out;
}

Rational PolyXY::eval(const Point& point) const
{
    Rational sum;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (e[i] == 0)
                continue;
            if (!point[i])
                throw UsageError(std::string("no value assigned to ") + var_name(static_cast<Var>(i)));
            term *= point[i]->pow(e[i]);
        }
        sum += term;
    }
    return sum;
}

std::string PolyXY::str() const
{
    if (terms_.empty())
        return "0";

    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const Rational magnitude = c.sign() < 0 ? -c : c;
        if (first)
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        first = false;

        std::string mono;
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += '*';
            mono += var_name(static_cast<Var>(i));
            if (e[i] > 1)
                mono += '^' + std::to_string(e[i]);
        }

        if (mono.empty())
            out += magnitude.str();
        else if (magnitude.is_one())
            out += mono;
        else
            out += magnitude.str() + '*' + mono;
    }
    return out;
}

} // namespace apx
