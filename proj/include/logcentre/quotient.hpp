#ifndef LOGCENTRE_QUOTIENT_HPP
#define LOGCENTRE_QUOTIENT_HPP

#include "logcentre/rational.hpp"

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

/* The commutative ring k[a,b,c,d]/(ad - bc) localized at a, used to check
 * the quiver algebra of the Francia example through its 2x2 matrix model. */
namespace logcentre::quotient {

/* Exponents of a, b, c, d. */
using Exponents = std::array<unsigned, 4>;

class CommPoly {
public:
    CommPoly() = default;
    CommPoly(Rational const& constant);  // NOLINT
    CommPoly(int constant) : CommPoly(Rational(constant)) {}  // NOLINT
    static CommPoly monomial(Exponents e, Rational coeff = 1);
    /* Single letter among a, b, c, d. */
    static CommPoly var(char name);

    std::map<Exponents, Rational> const& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(Exponents const& e, Rational const& coeff);

    CommPoly& operator+=(CommPoly const& o);
    CommPoly& operator-=(CommPoly const& o);
    friend CommPoly operator+(CommPoly a, CommPoly const& b) { return a += b; }
    friend CommPoly operator-(CommPoly a, CommPoly const& b) { return a -= b; }
    friend CommPoly operator*(CommPoly const& a, CommPoly const& b);
    friend bool operator==(CommPoly const&, CommPoly const&) = default;

    std::string str() const;

private:
    std::map<Exponents, Rational> terms_;
};

/* Reduction by the rule ad -> bc; confluent since the ideal is principal. */
CommPoly reduce(CommPoly const& p);

/* p / a^k */
struct Fraction {
    CommPoly numerator;
    unsigned a_power = 0;

    friend Fraction operator+(Fraction const& x, Fraction const& y);
    friend Fraction operator*(Fraction const& x, Fraction const& y);
};

/* Equal in the localization: x.num a^{y.k} = y.num a^{x.k} mod (ad - bc). */
bool equal(Fraction const& x, Fraction const& y);

using Matrix2 = std::array<std::array<Fraction, 2>, 2>;
Matrix2 operator*(Matrix2 const& x, Matrix2 const& y);
bool equal(Matrix2 const& x, Matrix2 const& y);

struct NamedCheck {
    std::string id;
    std::string description;
    bool pass = false;
};

struct QuotientReport {
    std::vector<NamedCheck> checks;
    bool overall = false;
};

/* Built-in datum "francia-algebra": the four quiver relations under the
 * matrix images of u, v, ubar, vbar, and the invariant-ring relations
 * xz - y^2, xd - yc, yd - zc at x = a^2, y = ab, z = b^2. */
QuotientReport commutative_quotient_check(std::string_view name);

}  // namespace logcentre::quotient

#endif
