#ifndef LOGCENTRE_INPUT_HPP
#define LOGCENTRE_INPUT_HPP

#include "logcentre/error.hpp"
#include "logcentre/ncpoly.hpp"
#include "logcentre/orders.hpp"
#include "logcentre/toric.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

/* The JSON input document.
 *
 *   {
 *     "version": "1",
 *     "objects": {
 *       "<name>": {"kind": "order", "ramification": [{"prime": "B", "e": 2, "blocks": [1, 1]}]},
 *       "<name>": {"kind": "cone_pair", "lattice_basis": [["1","0"],["1/3","1/3"]],
 *                  "rays": [[1,0],[-1,3]], "boundary": ["0","0"], "labels": ["D1","D2"]},
 *       "<name>": {"kind": "presentation", "generators": "abc", "weights": [2,2,1],
 *                  "rules": [{"lhs": "ca", "rhs": "-ac"}], "step_cap": 1000000}
 *     }
 *   }
 *
 * Rationals are strings "p/q" (plain JSON integers are accepted too).
 * "lattice_basis" lists the basis vectors of N in ambient coordinates and
 * defaults to the standard lattice; "boundary" defaults to zero, "labels"
 * to D1..Dr, "blocks" to all ones, "weights" to all ones. */
namespace logcentre::io {

inline constexpr std::string_view document_version = "1";

struct ConePairRecord {
    toric::ConePair pair;
    std::vector<std::string> labels;
    friend bool operator==(ConePairRecord const&, ConePairRecord const&) = default;
};

using InputObject = std::variant<orders::OrderSpec, ConePairRecord, ncpoly::RewriteSystem>;

struct InputDocument {
    std::string version{document_version};
    std::map<std::string, InputObject> objects;
    friend bool operator==(InputDocument const&, InputDocument const&) = default;
};

/* Throws Error(parse_error) on malformed JSON, unknown or missing fields,
 * duplicate object names, and invalid mathematical data; cones beyond desk
 * scale raise resource_limit. */
InputDocument parse_document(std::string_view json_text);
InputDocument load_document(std::filesystem::path const& path);

/* Pretty-printed, byte-stable for a given document. */
std::string serialize_document(InputDocument const& doc);

/* Looks up `name`, or the only object when name is empty. */
InputObject const& find_object(InputDocument const& doc, std::string const& name);

template <class T>
T const& get_object(InputDocument const& doc, std::string const& name, std::string_view kind)
{
    auto const& obj = find_object(doc, name);
    if (auto const* p = std::get_if<T>(&obj))
        return *p;
    fail(ErrorKind::parse_error, "object '" + name + "' is not a " + std::string(kind));
}

}  // namespace logcentre::io

#endif
