#include "logcentre/rational.hpp"
#include "logcentre/error.hpp"

#include <cctype>

namespace logcentre {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

Integer parse_integer(std::string_view s)
{
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    auto num = text.substr(0, slash);
    if (!is_integer_literal(num))
        fail(ErrorKind::parse_error, "malformed rational '" + std::string(text) + "'");
    if (slash == std::string_view::npos)
        return Rational(parse_integer(num));
    auto den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        fail(ErrorKind::parse_error, "malformed rational '" + std::string(text) + "'");
    Integer d = parse_integer(den);
    if (d == 0)
        fail(ErrorKind::parse_error, "zero denominator in '" + std::string(text) + "'");
    Rational q(parse_integer(num), d);
    q.canonicalize();
    return q;
}

std::string to_string(Rational const& q)
{
    return q.get_str(10);
}

std::string to_string(Integer const& z)
{
    return z.get_str(10);
}

Integer floor(Rational const& q)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil(Rational const& q)
{
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

bool is_integral(Rational const& q)
{
    return q.get_den() == 1;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    if (b == 0)
        fail(ErrorKind::invalid_argument, "division by zero");
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

std::int64_t to_int64(Integer const& z)
{
    if (!z.fits_slong_p())
        fail(ErrorKind::representation_overflow, "integer " + z.get_str() + " exceeds 64 bits");
    return z.get_si();
}

std::string format_vector(RationalVector const& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ',';
        out += to_string(v[i]);
    }
    return out + ")";
}

std::string format_vector(std::vector<std::int64_t> const& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(v[i]);
    }
    return out + ")";
}

}  // namespace logcentre
