#include "logcentre/quotient.hpp"
#include "logcentre/error.hpp"

#include <algorithm>

namespace logcentre::quotient {

CommPoly::CommPoly(Rational const& constant)
{
    add_term({0, 0, 0, 0}, constant);
}

CommPoly CommPoly::monomial(Exponents e, Rational coeff)
{
    CommPoly p;
    p.add_term(e, coeff);
    return p;
}

CommPoly CommPoly::var(char name)
{
    static constexpr std::string_view letters = "abcd";
    auto i = letters.find(name);
    if (i == std::string_view::npos)
        fail(ErrorKind::invalid_argument, "variable must be one of a, b, c, d");
    Exponents e{0, 0, 0, 0};
    e[i] = 1;
    return monomial(e);
}

void CommPoly::add_term(Exponents const& e, Rational const& coeff)
{
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

CommPoly& CommPoly::operator+=(CommPoly const& o)
{
    for (auto const& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

CommPoly& CommPoly::operator-=(CommPoly const& o)
{
    for (auto const& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

CommPoly operator*(CommPoly const& a, CommPoly const& b)
{
    CommPoly out;
    for (auto const& [ea, ca] : a.terms_)
        for (auto const& [eb, cb] : b.terms_) {
            Exponents e;
            for (std::size_t i = 0; i < 4; ++i)
                e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

std::string CommPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (auto const& [e, c] : terms_) {
        if (!out.empty())
            out += " + ";
        out += to_string(c);
        for (std::size_t i = 0; i < 4; ++i)
            if (e[i])
                out += std::string("*") + "abcd"[i] + (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
    }
    return out;
}

CommPoly reduce(CommPoly const& p)
{
    CommPoly out;
    for (auto const& [e, c] : p.terms()) {
        unsigned s = std::min(e[0], e[3]);
        out.add_term({e[0] - s, e[1] + s, e[2] + s, e[3] - s}, c);
    }
    return out;
}

namespace {

CommPoly a_power(unsigned k)
{
    return CommPoly::monomial({k, 0, 0, 0});
}

Fraction lift(CommPoly p)
{
    return Fraction{std::move(p), 0};
}

}  // namespace

Fraction operator+(Fraction const& x, Fraction const& y)
{
    unsigned k = std::max(x.a_power, y.a_power);
    return Fraction{x.numerator * a_power(k - x.a_power) + y.numerator * a_power(k - y.a_power), k};
}

Fraction operator*(Fraction const& x, Fraction const& y)
{
    return Fraction{x.numerator * y.numerator, x.a_power + y.a_power};
}

bool equal(Fraction const& x, Fraction const& y)
{
    return reduce(x.numerator * a_power(y.a_power) - y.numerator * a_power(x.a_power)).is_zero();
}

Matrix2 operator*(Matrix2 const& x, Matrix2 const& y)
{
    Matrix2 out;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t k = 0; k < 2; ++k)
            out[i][k] = x[i][0] * y[0][k] + x[i][1] * y[1][k];
    return out;
}

bool equal(Matrix2 const& x, Matrix2 const& y)
{
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t k = 0; k < 2; ++k)
            if (!equal(x[i][k], y[i][k]))
                return false;
    return true;
}

QuotientReport commutative_quotient_check(std::string_view name)
{
    if (name != "francia-algebra")
        fail(ErrorKind::invalid_argument, "unknown commutative quotient datum '" + std::string(name) + "'");

    auto a = CommPoly::var('a'), b = CommPoly::var('b'), c = CommPoly::var('c'), d = CommPoly::var('d');
    Fraction zero = lift(CommPoly());
    Matrix2 u{{{zero, lift(a)}, {zero, zero}}};
    Matrix2 v{{{zero, lift(c)}, {zero, zero}}};
    Matrix2 ubar{{{zero, zero}, {lift(CommPoly(1)), zero}}};
    Matrix2 vbar{{{zero, zero}, {Fraction{b, 1}, zero}}};

    QuotientReport report;
    auto add = [&](std::string id, std::string description, bool pass) {
        report.checks.push_back({std::move(id), std::move(description), pass});
    };
    add("quiver-u-ubar-v", "u ubar v = v ubar u", equal(u * ubar * v, v * ubar * u));
    add("quiver-u-vbar-v", "u vbar v = v vbar u", equal(u * vbar * v, v * vbar * u));
    add("quiver-ubar-u-vbar", "ubar u vbar = vbar u ubar", equal(ubar * u * vbar, vbar * u * ubar));
    add("quiver-ubar-v-vbar", "ubar v vbar = vbar v ubar", equal(ubar * v * vbar, vbar * v * ubar));
    add("defining-relation", "ad - bc = 0", reduce(a * d - b * c).is_zero());

    auto x = a * a, y = a * b, z = b * b;
    add("invariant-xz-y2", "xz - y^2 = 0 at x=a^2, y=ab, z=b^2", reduce(x * z - y * y).is_zero());
    add("invariant-xd-yc", "xd - yc = 0 at x=a^2, y=ab", reduce(x * d - y * c).is_zero());
    add("invariant-yd-zc", "yd - zc = 0 at y=ab, z=b^2", reduce(y * d - z * c).is_zero());

    report.overall = std::all_of(report.checks.begin(), report.checks.end(), [](NamedCheck const& c) { return c.pass; });
    return report;
}

}  // namespace logcentre::quotient
