#include "logcentre/error.hpp"
#include "logcentre/valmat.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace logcentre;
using namespace logcentre::valmat;

namespace {

oracle::Mat to_oracle(ValMatrix const& m)
{
    oracle::Mat out(m.size(), std::vector<std::int64_t>(m.size()));
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m.size(); ++c)
            out[r][c] = m(r, c).is_infinite() ? oracle::INF : m(r, c).value();
    return out;
}

}  // namespace

TEST_CASE("valuation arithmetic treats the zero ideal as infinity")
{
    CHECK(Valuation(2) + Valuation(-5) == Valuation(-3));
    CHECK((Valuation(3) + Valuation::infinity()).is_infinite());
    CHECK(Valuation(7) < Valuation::infinity());
    CHECK(min(Valuation(1), Valuation(-1)) == Valuation(-1));
    CHECK(Valuation::infinity().str() == "inf");
    CHECK_THROWS_AS(Valuation(INT64_MAX) + Valuation(1), Error);
}

TEST_CASE("standard order, radical and dualizing module match their entry formulas")
{
    for (std::int64_t e = 1; e <= 8; ++e) {
        CHECK(to_oracle(standard_order(e)) == oracle::delta(e));
        CHECK(to_oracle(jacobson_radical(e)) == oracle::radical(e));
        CHECK(to_oracle(dualizing_module(e)) == oracle::omega(e));
    }
}

TEST_CASE("standard order is idempotent and the identity on bimodules")
{
    for (std::int64_t e = 1; e <= 6; ++e) {
        auto d = standard_order(e);
        CHECK(tropical_mul(d, d) == d);
        CHECK(is_bimodule(jacobson_radical(e), d));
        CHECK(is_bimodule(dualizing_module(e), d));
        CHECK(tropical_mul(tropical_identity(e), d) == d);
    }
}

TEST_CASE("radical powers agree with repeated products")
{
    for (std::int64_t e = 1; e <= 6; ++e) {
        oracle::Mat p = oracle::delta(e);
        for (std::int64_t i = 0; i <= 15; ++i) {
            CHECK(to_oracle(radical_power(e, i)) == p);
            p = oracle::minplus(p, oracle::radical(e));
        }
    }
}

TEST_CASE("J^e is t times the order, and J^-1 inverts J")
{
    for (std::int64_t e = 1; e <= 6; ++e) {
        CHECK(radical_power(e, e) == standard_order(e).shifted(1));
        CHECK(tropical_mul(radical_power(e, -1), jacobson_radical(e)) == standard_order(e));
    }
}

TEST_CASE("omega powers agree with the tropical power oracle")
{
    for (std::int64_t e = 1; e <= 12; ++e)
        for (std::int64_t i = 0; i <= 30; ++i)
            REQUIRE(to_oracle(omega_power(e, i)) == oracle::omega_power(e, i));
}

TEST_CASE("centralizer of omega^i has the closed form")
{
    for (std::int64_t e = 1; e <= 12; ++e)
        for (std::int64_t i = 0; i <= 60; ++i) {
            auto v = centralizer(omega_power(e, i));
            CHECK(v.value() == oracle::closed_form(e, i));
            CHECK(v.value() == oracle::centralizer_scan(oracle::omega_power(e, i)));
        }
}

TEST_CASE("small centralizer values")
{
    CHECK(centralizer(omega_power(2, 1)).value() == 0);
    CHECK(centralizer(omega_power(2, 2)).value() == -1);
    CHECK(centralizer(omega_power(3, 2)).value() == -1);
    CHECK(centralizer(omega_power(3, 3)).value() == -2);
    CHECK(centralizer(standard_order(4)).value() == 0);
}

TEST_CASE("centralizer rejects non-bimodules")
{
    ValMatrix m{{0, 1}, {0, 0}};
    CHECK_FALSE(is_bimodule(m, standard_order(2)));
    try {
        centralizer(m);
        FAIL("expected precondition_violation");
    } catch (Error const& err) {
        CHECK(err.kind() == ErrorKind::precondition_violation);
    }
}

TEST_CASE("inflation matches the oracle and preserves centralizers")
{
    for (std::int64_t e = 1; e <= 4; ++e)
        for (std::size_t n = e; n <= 8; ++n) {
            std::vector<std::size_t> cur;
            oracle::compositions(n, e, cur, [&](std::vector<std::size_t> const& sizes) {
                BlockStructure blocks{sizes};
                auto order = inflate(standard_order(e), blocks);
                for (std::int64_t i = 0; i <= 20; ++i) {
                    auto big = inflate(omega_power(e, i), blocks);
                    CHECK(to_oracle(big) == oracle::inflate(oracle::omega_power(e, i), sizes));
                    CHECK(centralizer(big, order) == centralizer(omega_power(e, i)));
                }
            });
        }
}

TEST_CASE("inflation rejects a block structure of the wrong length")
{
    CHECK_THROWS_AS(inflate(standard_order(3), BlockStructure{{1, 2}}), Error);
}

TEST_CASE("monomial identities for the normal element")
{
    for (std::int64_t e = 1; e <= 12; ++e) {
        auto y = normal_element(e);
        MonomialMatrix p = monomial_identity(e);
        for (std::int64_t k = 0; k < e; ++k)
            p = monomial_mul(p, y);
        CHECK(p == monomial_scalar(e, 1, 1));
        CHECK(normal_element_power(e, e) == monomial_scalar(e, 1, 1));
        CHECK(monomial_mul(normal_element_power(e, -1), y) == monomial_identity(e));

        auto delta = oracle::delta(e);
        auto y_ideal = to_oracle(ideal_of(y));
        CHECK(oracle::minplus(y_ideal, delta) == oracle::radical(e));
        CHECK(oracle::minplus(delta, y_ideal) == oracle::radical(e));
        CHECK(oracle::minplus(to_oracle(ideal_of(normal_element_power(e, 1 - e))), delta) == oracle::omega(e));
    }
}

TEST_CASE("normal element has the expected shape")
{
    auto y = normal_element(3);
    CHECK(y(0, 1) == Monomial{1, 0});
    CHECK(y(1, 2) == Monomial{1, 0});
    CHECK(y(2, 0) == Monomial{1, 1});
    CHECK_FALSE(y(0, 0).has_value());
}
