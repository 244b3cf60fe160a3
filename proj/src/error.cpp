#include "logcentre/error.hpp"

namespace logcentre {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::precondition_violation: return "precondition-violation";
    case ErrorKind::representation_overflow: return "representation-overflow";
    case ErrorKind::resource_limit: return "resource-limit";
    case ErrorKind::not_applicable: return "not-applicable";
    case ErrorKind::non_standard_boundary: return "non-standard-boundary";
    case ErrorKind::nontermination_suspected: return "nontermination-suspected";
    case ErrorKind::parse_error: return "parse-error";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, std::string const& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
{
}

void fail(ErrorKind kind, std::string const& what)
{
    throw Error(kind, what);
}

}  // namespace logcentre
