#include "logcentre/error.hpp"
#include "logcentre/ncpoly.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace logcentre;
using namespace logcentre::ncpoly;

namespace {

oracle::M2 evaluate(NCPoly const& p, oracle::CliffordRep const& rep)
{
    oracle::M2 sum = oracle::scaled(0, oracle::id2());
    for (auto const& [w, coeff] : p.terms()) {
        oracle::M2 m = oracle::id2();
        for (char ch : w)
            m = m * (ch == 'a' ? rep.a : ch == 'b' ? rep.b : rep.c);
        sum = sum + oracle::scaled(coeff, m);
    }
    return sum;
}

std::vector<oracle::CliffordRep> sample_reps()
{
    std::vector<oracle::CliffordRep> reps;
    for (int p : {1, 2, -3})
        for (int r : {1, -2, 5})
            for (int q : {0, 3})
                for (int g : {1, -2, 3})
                    reps.push_back(oracle::clifford_rep(p, r, q, oracle::Q(g, 2)));
    return reps;
}

}  // namespace

TEST_CASE("oracle representations satisfy the defining relations")
{
    for (auto const& rep : sample_reps()) {
        CHECK(rep.a * rep.c + rep.c * rep.a == oracle::scaled(0, oracle::id2()));
        CHECK(rep.b * rep.c + rep.c * rep.b == oracle::scaled(0, oracle::id2()));
        CHECK(rep.a * rep.b + oracle::scaled(-1, rep.b * rep.a)
              == oracle::scaled(2, rep.c * rep.c * rep.c));
    }
}

TEST_CASE("parsing and printing")
{
    CHECK(parse("ab - 2c^3").str() == "ab - 2c^3");
    CHECK(parse("(a+b)^2").str() == "a^2 + ab + ba + b^2");
    CHECK(parse("1/2 a * b").str() == "1/2ab");
    CHECK(parse("0").str() == "0");
    CHECK(parse("a - a").is_zero());
    CHECK(parse("-(a)").str() == "-a");
    CHECK_THROWS_AS(parse("ab +", "abc"), Error);
    CHECK_THROWS_AS(parse("ax", "abc"), Error);
    CHECK_THROWS_AS(parse("(a"), Error);
}

TEST_CASE("multiplication is concatenation")
{
    auto p = parse("a + b");
    auto q = parse("a - b");
    CHECK((p * q).str() == "a^2 - ab + ba - b^2");
    CHECK(pow(parse("c"), 4) == NCPoly::word("cccc"));
    CHECK(substitute(parse("xy"), {{'x', parse("a")}, {'y', parse("b + 1")}}) == parse("ab + a"));
}

TEST_CASE("rules must decrease in the term order")
{
    CHECK_THROWS_AS(RewriteSystem("ab", {1, 1}, {Rule{"ab", parse("ba")}}), Error);
    CHECK_NOTHROW(RewriteSystem("ab", {1, 1}, {Rule{"ba", parse("ab")}}));
    // under unit weights ba -> ab - 2c^3 raises the degree
    CHECK_THROWS_AS(RewriteSystem("abc", {1, 1, 1}, {Rule{"ba", parse("ab - 2c^3")}}), Error);
}

TEST_CASE("Clifford normal forms")
{
    auto rs = clifford_system();
    CHECK(normal_form(parse("ba"), rs).str() == "ab - 2c^3");
    CHECK(normal_form(parse("ca"), rs).str() == "-ac");
    CHECK(normal_form(parse("cba"), rs) == parse("abc - 2c^4"));
    CHECK(normal_form(parse("ab - ba - 2c^3"), rs).is_zero());
    CHECK(normal_form(parse("(ab - ba)^2 - 4c^6"), rs).is_zero());
}

TEST_CASE("normal forms only contain ordered words")
{
    auto rs = clifford_system();
    auto nf = normal_form(parse("(a + b + c)^5"), rs);
    for (auto const& [w, coeff] : nf.terms()) {
        CHECK(w.find("ba") == std::string::npos);
        CHECK(w.find("ca") == std::string::npos);
        CHECK(w.find("cb") == std::string::npos);
    }
}

TEST_CASE("rewriting preserves values in every representation")
{
    auto rs = clifford_system();
    for (auto const* text : {"(a + b + c)^4", "cbacba", "(ab + ba)c - c(ab + ba)", "b^3 a^2 c"}) {
        auto p = parse(text);
        auto nf = normal_form(p, rs);
        for (auto const& rep : sample_reps())
            CHECK(evaluate(p, rep) == evaluate(nf, rep));
    }
}

TEST_CASE("centre of the Clifford algebra")
{
    auto rs = clifford_system();
    for (auto const* central : {"a^2", "b^2", "ab + ba", "c^2"}) {
        CHECK(is_central(parse(central), rs));
        for (auto const& rep : sample_reps()) {
            auto m = evaluate(parse(central), rep);
            CHECK(m * rep.a == rep.a * m);
            CHECK(m * rep.b == rep.b * m);
            CHECK(m * rep.c == rep.c * m);
        }
    }
    CHECK_FALSE(is_central(parse("c"), rs));
    CHECK_FALSE(is_central(parse("a"), rs));
    CHECK_FALSE(is_central(parse("ab"), rs));
}

TEST_CASE("centre hypersurface z^2 - 4xy = 4t^3")
{
    auto rs = clifford_system();
    auto lhs = parse("(ab + ba)^2 - 4a^2b^2");
    CHECK(verify_identity(lhs, parse("(ab - ba)^2"), rs));
    CHECK(verify_identity(lhs, parse("4c^6"), rs));
    for (auto const& rep : sample_reps())
        CHECK(evaluate(lhs, rep) == evaluate(parse("4c^6"), rep));
}

TEST_CASE("both compositions in the resolution vanish")
{
    auto rs = clifford_system();
    auto row = AlgebraMatrix::from_rows({{parse("b"), parse("a"), parse("c")}});
    auto mid = AlgebraMatrix::from_rows({
        {parse("-c"), parse("0"), parse("-a")},
        {parse("0"), parse("c"), parse("b")},
        {parse("-b"), parse("a"), parse("-2c^2")},
    });
    auto col = AlgebraMatrix::from_rows({{parse("a")}, {parse("b")}, {parse("c")}});
    CHECK(matrix_compose(row, mid, rs).is_zero());
    CHECK(matrix_compose(mid, col, rs).is_zero());
    CHECK(matrix_compose(row, mid, rs).str() == "[0, 0, 0]");
    CHECK(matrix_compose(mid, col, rs).str() == "[0; 0; 0]");

    // the same products evaluated entrywise in the oracle representations
    for (auto const& rep : sample_reps())
        for (std::size_t j = 0; j < 3; ++j) {
            auto sum = oracle::scaled(0, oracle::id2());
            for (std::size_t k = 0; k < 3; ++k)
                sum = sum + evaluate(row(0, k), rep) * evaluate(mid(k, j), rep);
            CHECK(sum == oracle::scaled(0, oracle::id2()));
            auto sum2 = oracle::scaled(0, oracle::id2());
            for (std::size_t k = 0; k < 3; ++k)
                sum2 = sum2 + evaluate(mid(j, k), rep) * evaluate(col(k, 0), rep);
            CHECK(sum2 == oracle::scaled(0, oracle::id2()));
        }
}

TEST_CASE("a nonzero composition is detected")
{
    auto rs = clifford_system();
    auto row = AlgebraMatrix::from_rows({{parse("a"), parse("b")}});
    auto col = AlgebraMatrix::from_rows({{parse("b")}, {parse("a")}});
    CHECK_FALSE(matrix_compose(row, col, rs).is_zero());
}

TEST_CASE("step cap raises nontermination_suspected")
{
    auto rs = clifford_system();
    rs.set_step_cap(5);
    try {
        normal_form(parse("(ba)^6"), rs);
        FAIL("expected nontermination_suspected");
    } catch (Error const& err) {
        CHECK(err.kind() == ErrorKind::nontermination_suspected);
    }
}
