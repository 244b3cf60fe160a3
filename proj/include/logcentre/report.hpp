#ifndef LOGCENTRE_REPORT_HPP
#define LOGCENTRE_REPORT_HPP

#include <concepts>
#include <string>
#include <vector>

namespace logcentre::report {

struct Check {
    std::string id;
    std::string description;
    std::string expected;
    std::string actual;
    bool pass = false;
};

class CaseStudyReport {
public:
    explicit CaseStudyReport(std::string name) : name_(std::move(name)) {}

    /* pass is expected == actual */
    void add(std::string id, std::string description, std::string expected, std::string actual);
    template <std::same_as<bool> B>
    void add(std::string id, std::string description, B expected, B actual)
    {
        add(std::move(id), std::move(description), std::string(expected ? "true" : "false"),
            std::string(actual ? "true" : "false"));
    }

    std::string const& name() const { return name_; }
    std::vector<Check> const& checks() const { return checks_; }
    bool overall() const;

    std::string to_text() const;
    std::string to_json() const;

private:
    std::string name_;
    std::vector<Check> checks_;
};

}  // namespace logcentre::report

#endif
