#include "logcentre/report.hpp"

#include <json.hpp>

#include <algorithm>

namespace logcentre::report {

void CaseStudyReport::add(std::string id, std::string description, std::string expected, std::string actual)
{
    bool pass = expected == actual;
    checks_.push_back({std::move(id), std::move(description), std::move(expected), std::move(actual), pass});
}

bool CaseStudyReport::overall() const
{
    return std::all_of(checks_.begin(), checks_.end(), [](Check const& c) { return c.pass; });
}

std::string CaseStudyReport::to_text() const
{
    std::string out = "case study: " + name_ + "\n";
    for (auto const& c : checks_) {
        out += std::string(c.pass ? "[PASS] " : "[FAIL] ") + c.id + ": " + c.description + "\n";
        out += "       expected: " + c.expected + "\n";
        out += "       actual:   " + c.actual + "\n";
    }
    out += std::string("overall: ") + (overall() ? "PASS" : "FAIL") + "\n";
    return out;
}

std::string CaseStudyReport::to_json() const
{
    nlohmann::ordered_json root;
    root["name"] = name_;
    root["checks"] = nlohmann::ordered_json::array();
    for (auto const& c : checks_) {
        nlohmann::ordered_json j;
        j["id"] = c.id;
        j["description"] = c.description;
        j["expected"] = c.expected;
        j["actual"] = c.actual;
        j["pass"] = c.pass;
        root["checks"].push_back(j);
    }
    root["overall"] = overall();
    return root.dump(2) + "\n";
}

}  // namespace logcentre::report
