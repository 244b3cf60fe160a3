#include "logcentre/orders.hpp"
#include "logcentre/error.hpp"

#include <algorithm>
#include <set>

namespace logcentre::orders {

RamificationDatum ramified_at(std::string prime_id, std::int64_t e)
{
    if (e < 1)
        fail(ErrorKind::invalid_argument, "ramification index must be positive");
    return RamificationDatum{std::move(prime_id), e,
                             valmat::BlockStructure::trivial(static_cast<std::size_t>(e))};
}

void OrderSpec::validate() const
{
    std::set<std::string> seen;
    for (auto const& d : ramification) {
        if (!seen.insert(d.prime_id).second)
            fail(ErrorKind::invalid_argument, "order '" + name + "': duplicate prime '" + d.prime_id + "'");
        if (d.e < 1)
            fail(ErrorKind::invalid_argument, "order '" + name + "': ramification index at '" + d.prime_id
                                                  + "' must be positive");
        if (d.blocks.sizes.size() != static_cast<std::size_t>(d.e))
            fail(ErrorKind::invalid_argument, "order '" + name + "': block structure at '" + d.prime_id
                                                  + "' must have length e");
        if (std::any_of(d.blocks.sizes.begin(), d.blocks.sizes.end(), [](std::size_t n) { return n == 0; }))
            fail(ErrorKind::invalid_argument, "order '" + name + "': block sizes must be positive");
    }
}

void QDivisor::add(std::string const& prime_id, Rational const& coeff)
{
    auto it = std::find_if(terms_.begin(), terms_.end(), [&](Term const& t) { return t.first == prime_id; });
    if (it == terms_.end()) {
        if (coeff != 0)
            terms_.emplace_back(prime_id, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0)
        terms_.erase(it);
}

Rational QDivisor::coefficient(std::string const& prime_id) const
{
    for (auto const& [p, c] : terms_)
        if (p == prime_id)
            return c;
    return 0;
}

QDivisor QDivisor::round_down_multiple(std::int64_t i) const
{
    QDivisor out;
    for (auto const& [p, c] : terms_)
        out.add(p, Rational(floor(c * i)));
    return out;
}

QDivisor QDivisor::round_up() const
{
    QDivisor out;
    for (auto const& [p, c] : terms_)
        out.add(p, Rational(ceil(c)));
    return out;
}

bool QDivisor::has_standard_coefficients() const
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [](Term const& t) { return standard_denominator(t.second) != 0; });
}

std::string QDivisor::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (auto const& [p, c] : terms_) {
        if (!out.empty())
            out += " + ";
        out += to_string(c) + "*" + p;
    }
    return out;
}

std::int64_t standard_denominator(Rational const& coeff)
{
    // (e-1)/e in lowest terms has numerator den-1
    if (coeff < 0 || coeff >= 1)
        return 0;
    if (coeff.get_num() + 1 != coeff.get_den())
        return 0;
    return to_int64(coeff.get_den());
}

QDivisor discriminant(OrderSpec const& spec)
{
    spec.validate();
    QDivisor d;
    for (auto const& datum : spec.ramification)
        d.add(datum.prime_id, Rational(datum.e - 1, datum.e));
    return d;
}

std::int64_t local_index(std::int64_t e)
{
    if (e < 1)
        fail(ErrorKind::invalid_argument, "ramification index must be positive");
    Rational c(e - 1, e);
    c.canonicalize();
    return to_int64(c.get_den());
}

std::vector<std::int64_t> cover_graded_valuations(std::int64_t e, std::int64_t m)
{
    if (e < 1 || m < 1)
        fail(ErrorKind::invalid_argument, "cover_graded_valuations: e and m must be positive");
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < m; ++i)
        out.push_back(-floor_div(i * (e - 1), e));
    return out;
}

LogCentre log_centre(OrderSpec const& spec)
{
    return LogCentre{discriminant(spec), spec};
}

CodimOneCheck check_cover_at_prime(RamificationDatum const& datum, std::int64_t m)
{
    OrderSpec single{"", {datum}};
    QDivisor d = discriminant(single);

    CodimOneCheck out;
    out.graded = cover_graded_valuations(datum.e, m);
    auto order = valmat::inflate(valmat::standard_order(datum.e), datum.blocks);
    for (std::int64_t i = 0; i < m; ++i) {
        auto module = valmat::inflate(valmat::omega_power(datum.e, i), datum.blocks);
        out.centralizers.push_back(valmat::centralizer(module, order).value());
        out.round_down.push_back(-to_int64(d.round_down_multiple(i).coefficient(datum.prime_id).get_num()));
    }
    out.agree = out.graded == out.centralizers && out.graded == out.round_down;
    return out;
}

}  // namespace logcentre::orders
