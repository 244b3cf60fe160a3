#include "logcentre/error.hpp"
#include "logcentre/toric.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

#include <functional>
#include <set>

#include <doctest.h>

using namespace logcentre;
using namespace logcentre::toric;
using linalg::IntVector;
using linalg::QMatrix;

namespace {

Lattice francia_lattice()
{
    QMatrix b = QMatrix::identity(3);
    b(2, 2) = Rational(1, 2);
    return Lattice(b);
}

Cone francia_cone()
{
    return Cone(francia_lattice(), {{0, 0, 1}, {0, 1, 2}, {1, 0, 2}, {1, 1, 2}});
}

ConePair francia_pair()
{
    return ConePair{francia_cone(), ToricDivisor{{Rational(1, 2), 0, 0, 0}}};
}

/* The cyclic quotient 1/3(1,1): N generated by Z^2 and (1/3,1/3). */
Cone third_cone()
{
    return Cone(Lattice(QMatrix::from_rows({{1, Rational(1, 3)}, {0, Rational(1, 3)}})), {{1, 0}, {-1, 3}});
}

std::vector<oracle::Vec> as_vecs(std::vector<IntVector> const& v)
{
    return {v.begin(), v.end()};
}

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

}  // namespace

TEST_CASE("cone construction normalizes and validates rays")
{
    Cone c(Lattice::standard(2), {{2, 0}, {0, 3}});
    CHECK(c.rays() == std::vector<IntVector>{{1, 0}, {0, 1}});
    CHECK(kind_of([] { Cone(Lattice::standard(2), {{1, 0}}); }) == ErrorKind::invalid_argument);
    CHECK(kind_of([] { Cone(Lattice::standard(2), {{1, 0}, {-1, 0}}); }) == ErrorKind::invalid_argument);
    CHECK(kind_of([] { Cone(Lattice::standard(2), {{1, 0}, {1, 1}, {0, 1}}); }) == ErrorKind::invalid_argument);
    CHECK(kind_of([] { Cone(Lattice::standard(2), {{1, 0}, {1, 0}}); }) == ErrorKind::invalid_argument);
    CHECK(kind_of([] { Cone(Lattice::standard(2), {{101, 1}, {0, 1}}); }) == ErrorKind::resource_limit);
    CHECK(kind_of([] {
              Cone(Lattice::standard(5), {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0},
                                          {0, 0, 0, 0, 1}});
          })
          == ErrorKind::resource_limit);
}

TEST_CASE("facet normals match the brute-force oracle")
{
    Cone c(Lattice::standard(3), {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}});
    CHECK(as_vecs(c.facet_normals()) == oracle::facets(as_vecs(c.rays())));
}

TEST_CASE("Francia base: K is not Q-Cartier, K + D is")
{
    auto pair = francia_pair();
    CHECK_FALSE(q_cartier_functional(pair.cone, canonical_divisor(pair.cone)));
    auto u = q_cartier_functional(pair, log_canonical_divisor(pair));
    REQUIRE(u);
    CHECK(u->u == RationalVector{0, 0, Rational(1, 2)});
    auto k = klt_check(pair);
    CHECK(k.klt);
    REQUIRE(k.functional);
    CHECK(k.functional->u == RationalVector{0, 0, Rational(1, 2)});
    CHECK(cartier_index(*k.functional, pair.cone.lattice()) == 2);
    CHECK(kind_of([&] { canonical_check(pair.cone); }) == ErrorKind::not_applicable);
}

TEST_CASE("Francia cover is Z^3 of degree 2 with the expected rays")
{
    auto cover = log_canonical_cover(francia_pair());
    CHECK(cover.degree == 2);
    CHECK(cover.cover_lattice.same_points_as(Lattice::standard(3)));
    std::vector<RationalVector> ambient;
    for (auto const& r : cover.cover_cone.rays())
        ambient.push_back(cover.cover_lattice.to_ambient(r));
    std::sort(ambient.begin(), ambient.end());
    CHECK(ambient
          == std::vector<RationalVector>{{0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}});
    CHECK(cover.ramification == std::vector<std::int64_t>{2, 1, 1, 1});
    CHECK(canonical_check(cover.cover_cone));
    for (auto const& h : hilbert_basis(cover.cover_cone))
        CHECK(linalg::dot(cover.pulled_back.u, h) >= 1);
}

TEST_CASE("Francia dual semigroups")
{
    auto base = dual_cone_generators(francia_cone());
    CHECK(base.size() == 5);
    auto dual = francia_cone().lattice().dual();
    std::vector<RationalVector> exps;
    for (auto const& g : base)
        exps.push_back(dual.to_ambient(g));
    std::sort(exps.begin(), exps.end());
    CHECK(exps == std::vector<RationalVector>{{-2, 0, 2}, {-1, -1, 2}, {0, -2, 2}, {0, 1, 0}, {1, 0, 0}});

    auto cover = log_canonical_cover(francia_pair());
    CHECK(dual_cone_generators(cover.cover_cone).size() == 4);
}

TEST_CASE("1/3(1,1) is klt but not canonical; its cover is smooth")
{
    auto cone = third_cone();
    ConePair pair{cone, ToricDivisor{{0, 0}}};
    auto k = klt_check(pair);
    CHECK(k.klt);
    REQUIRE(k.functional);
    CHECK(k.functional->u == RationalVector{1, Rational(2, 3)});
    CHECK(cartier_index(*k.functional, cone.lattice()) == 3);
    CHECK_FALSE(canonical_check(cone));
    auto cover = log_canonical_cover(pair);
    CHECK(cover.degree == 3);
    CHECK(cover.cover_lattice.same_points_as(Lattice::standard(2)));
    CHECK(hilbert_basis(cover.cover_cone).size() == 2);
    CHECK(canonical_check(cover.cover_cone));
}

TEST_CASE("non-klt pair")
{
    Cone c(Lattice::standard(2), {{1, 0}, {0, 1}});
    ConePair pair{c, ToricDivisor{{1, 0}}};
    auto k = klt_check(pair);
    CHECK_FALSE(k.klt);
    CHECK(kind_of([&] { log_canonical_cover(pair); }) == ErrorKind::non_standard_boundary);
}

TEST_CASE("Hilbert bases match the brute-force oracle")
{
    std::vector<std::vector<IntVector>> cones{
        {{1, 0}, {1, 5}},
        {{2, -1}, {-1, 3}},
        {{1, 0, 0}, {0, 1, 0}, {1, 1, 3}},
        {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}},
        {{1, 2, 3}, {3, -1, 1}, {-2, 1, 2}},
    };
    for (auto const& rays : cones) {
        Cone c(Lattice::standard(rays.front().size()), rays);
        CHECK(as_vecs(hilbert_basis(c)) == oracle::hilbert_basis(as_vecs(c.rays())));
    }
}

TEST_CASE("Hilbert basis does not depend on the thread count")
{
    Cone c(Lattice::standard(3), {{5, 0, 2}, {0, 5, 2}, {-5, 0, 2}, {0, -5, 2}});
    auto one = hilbert_basis(c, {1});
    for (unsigned t : {2u, 3u, 8u})
        CHECK(hilbert_basis(c, {t}) == one);
}

TEST_CASE("enumeration respects the point cap")
{
    Cone c(Lattice::standard(3), {{1, 0, 0}, {0, 1, 0}, {97, 89, 100}});
    CHECK(kind_of([&] { hilbert_basis(c, {1, 10}); }) == ErrorKind::resource_limit);
}

TEST_CASE("dual of the dual is the original cone")
{
    auto c = francia_cone();
    auto dd = dual_cone(dual_cone(c));
    CHECK(dd.lattice().same_points_as(c.lattice()));
    std::vector<RationalVector> a, b;
    for (auto const& r : c.rays())
        a.push_back(c.lattice().to_ambient(r));
    for (auto const& r : dd.rays())
        b.push_back(dd.lattice().to_ambient(r));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
}

TEST_CASE("corpus: functional, cover and klt/canonical correspondence")
{
    auto entries = corpus::generate(60);
    REQUIRE(entries.size() >= 50);
    for (auto const& entry : entries) {
        auto k = klt_check(entry.pair);
        REQUIRE(k.functional);
        CHECK(k.functional->u == entry.u);
        CHECK(k.klt);

        auto cover = log_canonical_cover(entry.pair);
        CHECK(cover.ramification == entry.e);
        // index of the cover lattice = number of classes of <u, n> mod Z
        std::set<Rational> classes;
        for (auto const& p : oracle::cone_points(entry.rays, 12)) {
            Rational s = linalg::dot(entry.u, IntVector(p.begin(), p.end()));
            classes.insert(s - Rational(floor(s)));
        }
        CHECK(static_cast<std::int64_t>(classes.size()) == cover.degree);
        for (auto const& b : cover.sublattice_basis)
            CHECK(is_integral(linalg::dot(entry.u, b)));

        auto result = cover_correspondence_check(entry.pair);
        CHECK(result.agree);
        CHECK(result.cover_canonical == k.klt);
    }
}

TEST_CASE("pair from a log centre")
{
    orders::OrderSpec spec{"A", {orders::ramified_at("D1", 2)}};
    auto pair = pair_from_log_centre(francia_cone(), {"D1", "D2", "D3", "D4"}, orders::log_centre(spec));
    CHECK(pair == francia_pair());
}
