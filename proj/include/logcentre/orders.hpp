#ifndef LOGCENTRE_ORDERS_HPP
#define LOGCENTRE_ORDERS_HPP

#include "logcentre/rational.hpp"
#include "logcentre/valmat.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

/* Tame orders described by their codimension-one ramification data. */
namespace logcentre::orders {

struct RamificationDatum {
    std::string prime_id;
    std::int64_t e = 1;
    valmat::BlockStructure blocks;

    friend bool operator==(RamificationDatum const&, RamificationDatum const&) = default;
};

/* Builds a datum with all blocks of size one. */
RamificationDatum ramified_at(std::string prime_id, std::int64_t e);

struct OrderSpec {
    std::string name;
    std::vector<RamificationDatum> ramification;

    /* Throws invalid_argument on duplicate primes, e < 1 or a block
     * structure whose length is not e. */
    void validate() const;

    friend bool operator==(OrderSpec const&, OrderSpec const&) = default;
};

/* A Q-divisor sum coeff * D_prime.  Terms keep insertion order; primes are
 * distinct and zero coefficients are dropped on insertion. */
class QDivisor {
public:
    using Term = std::pair<std::string, Rational>;

    QDivisor() = default;

    void add(std::string const& prime_id, Rational const& coeff);
    Rational coefficient(std::string const& prime_id) const;

    std::vector<Term> const& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /* Coefficientwise round-down of i * D. */
    QDivisor round_down_multiple(std::int64_t i) const;
    QDivisor round_up() const;

    /* Every coefficient is (e-1)/e for some positive integer e. */
    bool has_standard_coefficients() const;

    std::string str() const;

    friend bool operator==(QDivisor const&, QDivisor const&) = default;

private:
    std::vector<Term> terms_;
};

/* Returns e with coeff = (e-1)/e, or 0 if coeff is not of that form. */
std::int64_t standard_denominator(Rational const& coeff);

struct LogCentre {
    QDivisor divisor;
    OrderSpec source;
};

QDivisor discriminant(OrderSpec const& spec);

/* Least m with m (e-1)/e integral. */
std::int64_t local_index(std::int64_t e);

/* v_i = -floor(i (e-1) / e) for i = 0 .. m-1, the exponents of the graded
 * pieces Z(omega^i) of the canonical cover's centre at a prime of
 * ramification e. */
std::vector<std::int64_t> cover_graded_valuations(std::int64_t e, std::int64_t m);

LogCentre log_centre(OrderSpec const& spec);

struct CodimOneCheck {
    std::vector<std::int64_t> graded;         // closed form
    std::vector<std::int64_t> centralizers;   // from the (block) hereditary order
    std::vector<std::int64_t> round_down;     // minus the coefficient of floor(i D) at the prime
    bool agree = false;
};

/* Compares the closed form against centralizers of powers of the dualizing
 * module of the block hereditary order of `datum`, and against the
 * round-down of i times the discriminant coefficient. */
CodimOneCheck check_cover_at_prime(RamificationDatum const& datum, std::int64_t m);

}  // namespace logcentre::orders

#endif
