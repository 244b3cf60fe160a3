#ifndef LOGCENTRE_RATIONAL_HPP
#define LOGCENTRE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace logcentre {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

/* Parses "p/q", "-p/q" or an integer string; the result is canonical.
 * Throws Error(parse_error) on anything else, including q = 0. */
Rational parse_rational(std::string_view text);

std::string to_string(Rational const& q);
std::string to_string(Integer const& z);

Integer floor(Rational const& q);
Integer ceil(Rational const& q);
bool is_integral(Rational const& q);

/* Floor division of machine integers, rounding toward -infinity. */
std::int64_t floor_div(std::int64_t a, std::int64_t b);

std::int64_t to_int64(Integer const& z);

/* "(a,b,c)" with exact entries. */
std::string format_vector(RationalVector const& v);
std::string format_vector(std::vector<std::int64_t> const& v);

}  // namespace logcentre

#endif
