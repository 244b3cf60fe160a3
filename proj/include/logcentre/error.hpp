#ifndef LOGCENTRE_ERROR_HPP
#define LOGCENTRE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace logcentre {

enum class ErrorKind {
    invalid_argument,
    precondition_violation,
    representation_overflow,
    resource_limit,
    not_applicable,
    non_standard_boundary,
    nontermination_suspected,
    parse_error,
};

std::string_view to_string(ErrorKind kind);

/* Every failure raised by the library carries one of the kinds above, so
 * the command-line front end can map it to an exit status. */
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string const& what);
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, std::string const& what);

}  // namespace logcentre

#endif
