#include "logcentre/error.hpp"
#include "logcentre/ncpoly.hpp"
#include "logcentre/orders.hpp"
#include "logcentre/toric.hpp"
#include "logcentre/valmat.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace logcentre;
using linalg::IntVector;
using linalg::QMatrix;

namespace {

ErrorKind kind_of(std::function<void()> const& f)
{
    try {
        f();
    } catch (Error const& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::invalid_argument;
}

ncpoly::NCPoly random_poly(std::mt19937& rng, std::size_t max_degree)
{
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    ncpoly::NCPoly p;
    int terms = uniform(1, 4);
    for (int t = 0; t < terms; ++t) {
        std::string w;
        auto len = static_cast<std::size_t>(uniform(0, static_cast<int>(max_degree)));
        for (std::size_t i = 0; i < len; ++i)
            w += "abc"[uniform(0, 2)];
        Rational c(uniform(-5, 5), uniform(1, 3));
        c.canonicalize();
        p.add_term(w, c);
    }
    return p;
}

}  // namespace

// valuation matrices

TEST_CASE("explicit small matrices")
{
    using valmat::ValMatrix;
    CHECK(valmat::standard_order(2) == ValMatrix{{0, 0}, {1, 0}});
    CHECK(valmat::standard_order(1) == ValMatrix{{0}});
    CHECK(valmat::standard_order(3) == ValMatrix{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}});
    CHECK(valmat::jacobson_radical(2) == ValMatrix{{1, 0}, {1, 1}});
    CHECK(valmat::jacobson_radical(1) == ValMatrix{{1}});
    CHECK(valmat::jacobson_radical(3) == ValMatrix{{1, 0, 0}, {1, 1, 0}, {1, 1, 1}});
    CHECK(valmat::dualizing_module(2) == ValMatrix{{0, -1}, {0, 0}});
    CHECK(valmat::dualizing_module(1) == ValMatrix{{0}});
    CHECK(valmat::dualizing_module(3) == ValMatrix{{0, -1, -1}, {0, 0, -1}, {0, 0, 0}});
    CHECK(valmat::radical_power(2, 2) == ValMatrix{{1, 1}, {2, 1}});
    CHECK(valmat::radical_power(3, 0) == valmat::standard_order(3));
    CHECK(valmat::omega_power(2, 1) == ValMatrix{{0, -1}, {0, 0}});
    CHECK(valmat::omega_power(3, 0) == valmat::standard_order(3));
    CHECK(valmat::omega_power(3, 2) == ValMatrix{{-1, -1, -2}, {-1, -1, -1}, {0, -1, -1}});
    CHECK(kind_of([] { valmat::standard_order(0); }) == ErrorKind::invalid_argument);
}

TEST_CASE("inflation examples")
{
    using valmat::ValMatrix;
    CHECK(valmat::inflate(valmat::standard_order(2), {{1, 2}}) == ValMatrix{{0, 0, 0}, {1, 0, 0}, {1, 0, 0}});
    auto a = valmat::omega_power(4, 3);
    CHECK(valmat::inflate(a, valmat::BlockStructure::trivial(4)) == a);
    valmat::BlockStructure blocks{{2, 1, 2}};
    auto big = valmat::inflate(valmat::omega_power(3, 2), blocks);
    CHECK(valmat::centralizer(big, valmat::inflate(valmat::standard_order(3), blocks)).value() == -1);
    CHECK(kind_of([] { valmat::inflate(valmat::standard_order(2), {{1, 1, 1}}); }) == ErrorKind::invalid_argument);
}

TEST_CASE("monomial oracle examples")
{
    auto y1 = valmat::normal_element(1);
    CHECK(y1 == valmat::monomial_scalar(1, 1, 1));
    CHECK(kind_of([] { valmat::monomial_mul(valmat::normal_element(2), valmat::normal_element(3)); })
          == ErrorKind::invalid_argument);
    // (1 + t) cannot be stored as a single monomial
    valmat::MonomialMatrix row(2), col(2);
    row(0, 0) = valmat::Monomial{1, 0};
    row(0, 1) = valmat::Monomial{1, 0};
    col(0, 0) = valmat::Monomial{1, 0};
    col(1, 0) = valmat::Monomial{1, 1};
    CHECK(kind_of([&] { valmat::monomial_mul(row, col); }) == ErrorKind::representation_overflow);
}

// orders

TEST_CASE("round-up of the discriminant is the classical discriminant")
{
    orders::OrderSpec spec{"A", {orders::ramified_at("P", 1), orders::ramified_at("Q", 2), orders::ramified_at("R", 5)}};
    auto d = orders::discriminant(spec);
    CHECK(d.has_standard_coefficients());
    auto up = d.round_up();
    CHECK(up.coefficient("P") == 0);
    CHECK(up.coefficient("Q") == 1);
    CHECK(up.coefficient("R") == 1);
}

TEST_CASE("graded valuations are periodic with period the local index")
{
    for (std::int64_t e = 1; e <= 12; ++e) {
        auto m = orders::local_index(e);
        auto v = orders::cover_graded_valuations(e, 3 * m + 1);
        Rational shift(m * (e - 1), e);
        shift.canonicalize();
        REQUIRE(is_integral(shift));
        for (std::int64_t i = 0; i + m < static_cast<std::int64_t>(v.size()); ++i)
            CHECK(v[i + m] == v[i] - shift.get_num().get_si());
    }
    CHECK(orders::cover_graded_valuations(1, 1) == std::vector<std::int64_t>{0});
    CHECK(orders::local_index(6) == 6);
}

TEST_CASE("graded valuations equal centralizers at the local index")
{
    for (std::int64_t e = 1; e <= 12; ++e) {
        auto m = orders::local_index(e);
        auto v = orders::cover_graded_valuations(e, m);
        for (std::int64_t i = 0; i < m; ++i)
            CHECK(v[i] == valmat::centralizer(valmat::omega_power(e, i)).value());
    }
}

// toric

TEST_CASE("primitive vectors")
{
    CHECK(toric::primitive({0, 0, 2}) == IntVector{0, 0, 1});
    CHECK(toric::primitive({2, 4, 6}) == IntVector{1, 2, 3});
    CHECK(kind_of([] { toric::primitive({0, 0}); }) == ErrorKind::invalid_argument);
    QMatrix b = QMatrix::identity(3);
    b(2, 2) = Rational(1, 2);
    toric::Lattice half(b);
    CHECK(half.coordinates_of({0, 0, 1}) == RationalVector{0, 0, 2});
    CHECK(toric::primitive_ray({0, 0, 1}, half) == IntVector{0, 0, 1});
    std::mt19937 rng(7);
    for (int n = 0; n < 200; ++n) {
        IntVector v{std::uniform_int_distribution<int>(-9, 9)(rng), std::uniform_int_distribution<int>(-9, 9)(rng),
                    std::uniform_int_distribution<int>(-9, 9)(rng)};
        if (v == IntVector{0, 0, 0})
            continue;
        std::int64_t k = std::uniform_int_distribution<int>(1, 7)(rng);
        IntVector kv;
        for (auto x : v)
            kv.push_back(k * x);
        CHECK(toric::primitive(kv) == toric::primitive(v));
    }
}

TEST_CASE("first orthant")
{
    toric::Cone c(toric::Lattice::standard(2), {{1, 0}, {0, 1}});
    auto u = toric::q_cartier_functional(c, toric::ToricDivisor{{0, 0}});
    REQUIRE(u);
    CHECK(u->u == RationalVector{0, 0});
    CHECK(toric::klt_check(toric::ConePair{c, {{0, 0}}}).klt);
    CHECK(toric::cartier_index(toric::CartierFunctional{{1, 1}}, c.lattice()) == 1);
    CHECK(toric::hilbert_basis(c) == std::vector<IntVector>{{0, 1}, {1, 0}});
    CHECK(toric::canonical_check(c));
    CHECK(toric::dual_cone_generators(c) == std::vector<IntVector>{{0, 1}, {1, 0}});
    auto cover = toric::log_canonical_cover(toric::ConePair{c, {{0, 0}}});
    CHECK(cover.degree == 1);
    CHECK(cover.cover_lattice.same_points_as(c.lattice()));
    CHECK(kind_of([&] { toric::log_canonical_cover(toric::ConePair{c, {{1, 0}}}); })
          == ErrorKind::non_standard_boundary);
    CHECK(kind_of([&] { toric::cover_correspondence_check(toric::ConePair{c, {{1, 0}}}); })
          == ErrorKind::non_standard_boundary);
}

TEST_CASE("cone((1,0),(1,2)) Hilbert basis")
{
    toric::Cone c(toric::Lattice::standard(2), {{1, 0}, {1, 2}});
    CHECK(toric::hilbert_basis(c) == std::vector<IntVector>{{1, 0}, {1, 1}, {1, 2}});
}

TEST_CASE("the 1/3(1,1) quotient given as the first orthant of its lattice")
{
    toric::Lattice n(QMatrix::from_rows({{1, Rational(1, 3)}, {0, Rational(1, 3)}}));
    toric::Cone c(n, {toric::primitive_ray({1, 0}, n), toric::primitive_ray({0, 1}, n)});
    toric::ConePair pair{c, {{0, 0}}};
    auto k = toric::klt_check(pair);
    REQUIRE(k.functional);
    // u = (1,1) in ambient dual coordinates
    QMatrix bt = n.basis().transpose();
    CHECK(bt * RationalVector{1, 1} == k.functional->u);
    CHECK(toric::cartier_index(*k.functional, n) == 3);
    CHECK_FALSE(toric::canonical_check(c));
    auto r = toric::cover_correspondence_check(pair);
    CHECK(r.base_klt);
    CHECK(r.cover_canonical);
    CHECK(r.agree);
}

TEST_CASE("klt is equivalent to all boundary coefficients below one")
{
    std::mt19937 rng(99);
    for (auto const& entry : corpus::generate(40, 4242)) {
        auto pair = entry.pair;
        auto i = std::uniform_int_distribution<std::size_t>(0, pair.boundary.coeffs.size() - 1)(rng);
        // raise one coefficient to 1 and above; simplicial cones stay Q-Cartier
        std::vector<Rational> bumps{Rational(0), Rational(1) - pair.boundary.coeffs[i], Rational(3, 2) - pair.boundary.coeffs[i]};
        for (auto const& bump : bumps) {
            auto p = pair;
            p.boundary.coeffs[i] += bump;
            auto k = toric::klt_check(p);
            if (!k.functional)
                continue;
            bool below = std::all_of(p.boundary.coeffs.begin(), p.boundary.coeffs.end(),
                                     [](Rational const& c) { return c < 1; });
            CHECK(k.klt == below);
        }
    }
}

TEST_CASE("Hilbert basis invariants on the corpus")
{
    for (auto const& entry : corpus::generate(30, 777)) {
        auto const& cone = entry.pair.cone;
        auto hb = toric::hilbert_basis(cone);
        CHECK(hb == toric::hilbert_basis(cone));
        CHECK(std::is_sorted(hb.begin(), hb.end()));
        for (auto const& r : cone.rays())
            CHECK(std::find(hb.begin(), hb.end(), r) != hb.end());
        std::set<IntVector> all(hb.begin(), hb.end());
        for (auto const& x : hb)
            for (auto const& y : hb) {
                if (x == y)
                    continue;
                IntVector d;
                for (std::size_t i = 0; i < x.size(); ++i)
                    d.push_back(x[i] - y[i]);
                CHECK_FALSE((cone.contains(d) && d != IntVector(x.size(), 0)));
            }
        std::vector<oracle::Vec> rays(cone.rays().begin(), cone.rays().end());
        CHECK(std::vector<oracle::Vec>(hb.begin(), hb.end()) == oracle::hilbert_basis(rays));
    }
}

TEST_CASE("functionals satisfy every ray equation exactly")
{
    for (auto const& entry : corpus::generate(30, 31337)) {
        auto d = toric::log_canonical_divisor(entry.pair);
        auto u = toric::q_cartier_functional(entry.pair, d);
        REQUIRE(u);
        for (std::size_t i = 0; i < entry.pair.cone.rays().size(); ++i)
            CHECK(linalg::dot(u->u, entry.pair.cone.rays()[i]) == -d.coeffs[i]);
        auto cover = toric::log_canonical_cover(entry.pair);
        for (auto const& r : cover.cover_cone.rays())
            CHECK(linalg::dot(cover.pulled_back.u, r) == 1);
        CHECK(cover.degree == toric::cartier_index(*toric::klt_check(entry.pair).functional, entry.pair.cone.lattice()));
    }
}

// noncommutative polynomials

TEST_CASE("normal form properties on random inputs")
{
    auto rs = ncpoly::clifford_system();
    std::mt19937 rng(2024);
    for (int n = 0; n < 60; ++n) {
        auto p = random_poly(rng, 6);
        auto q = random_poly(rng, 6);
        auto np = ncpoly::normal_form(p, rs);
        auto nq = ncpoly::normal_form(q, rs);
        CHECK(ncpoly::normal_form(np, rs) == np);
        CHECK(ncpoly::normal_form(p + q, rs) == np + nq);
        CHECK(ncpoly::normal_form(ncpoly::NCPoly(Rational(-3, 7)) * p, rs) == ncpoly::NCPoly(Rational(-3, 7)) * np);
        CHECK(ncpoly::normal_form(p * q, rs) == ncpoly::normal_form(np * nq, rs));
    }
    for (int n = 0; n < 30; ++n) {
        auto nf = ncpoly::normal_form(random_poly(rng, 8), rs);
        for (auto const& [w, coeff] : nf.terms())
            CHECK(std::is_sorted(w.begin(), w.end()));
    }
}

TEST_CASE("identity and composition edge cases")
{
    auto rs = ncpoly::clifford_system();
    CHECK(ncpoly::verify_identity(ncpoly::NCPoly(0), ncpoly::NCPoly(0), rs));
    CHECK(ncpoly::is_central(ncpoly::parse("ab + ba"), rs));
    CHECK(kind_of([&] {
              ncpoly::matrix_compose(ncpoly::AlgebraMatrix(1, 2), ncpoly::AlgebraMatrix(3, 1), rs);
          })
          == ErrorKind::invalid_argument);
}
