#include "logcentre/case_studies.hpp"
#include "logcentre/error.hpp"

#include <doctest.h>

#include <json.hpp>

using namespace logcentre;

TEST_CASE("built-in names")
{
    CHECK(cases::builtin_names() == std::vector<std::string>{"clifford", "francia"});
    CHECK_THROWS_AS(cases::builtin_document("nope"), Error);
}

TEST_CASE("monomial names")
{
    CHECK(cases::monomial_name({-2, 0, 2}) == "x^-2z^2");
    CHECK(cases::monomial_name({1, 0, 0}) == "x");
    CHECK(cases::monomial_name({0, -1, 1}) == "y^-1z");
    CHECK(cases::monomial_name({0, 0, 0}) == "1");
}

TEST_CASE("every case study check passes")
{
    for (auto const& name : cases::builtin_names()) {
        auto rep = cases::run_case_study(name);
        for (auto const& c : rep.checks())
            CHECK_MESSAGE(c.pass, std::string(name + "/" + c.id + ": expected " + c.expected + ", got " + c.actual));
        CHECK(rep.overall());
    }
}

TEST_CASE("reports are identical across runs and thread counts")
{
    for (auto const& name : cases::builtin_names()) {
        auto text = cases::run_case_study(name, {1}).to_text();
        auto json = cases::run_case_study(name, {1}).to_json();
        for (unsigned t : {1u, 2u, 4u, 8u}) {
            CHECK(cases::run_case_study(name, {t}).to_text() == text);
            CHECK(cases::run_case_study(name, {t}).to_json() == json);
        }
        auto parsed = nlohmann::json::parse(json);
        CHECK(parsed["name"] == name);
        CHECK(parsed["overall"] == true);
    }
}

TEST_CASE("report bookkeeping")
{
    report::CaseStudyReport rep("r");
    rep.add("s", "strings", "1", "1");
    rep.add("b", "flags", true, false);
    CHECK(rep.checks().size() == 2);
    CHECK(rep.checks()[0].pass);
    CHECK_FALSE(rep.checks()[1].pass);
    CHECK(rep.checks()[1].expected == "true");
    CHECK_FALSE(rep.overall());
    CHECK(rep.to_text().find("[FAIL] b: flags") != std::string::npos);
    CHECK(rep.to_text().find("overall: FAIL") != std::string::npos);
}
