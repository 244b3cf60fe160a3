#ifndef LOGCENTRE_CASE_STUDIES_HPP
#define LOGCENTRE_CASE_STUDIES_HPP

#include "logcentre/input.hpp"
#include "logcentre/report.hpp"
#include "logcentre/toric.hpp"

#include <string>
#include <vector>

/* Built-in reproducible case studies.
 *
 * "francia": the quiver algebra whose Z/2 skew group ring has the base of
 * the Francia flip as centre, ramified along one toric divisor.
 * "clifford": the algebra on a, b, c with ac+ca = bc+cb = 0 and
 * ab - ba = 2c^3, ramified along t = c^2 = 0. */
namespace logcentre::cases {

std::vector<std::string> builtin_names();

/* Input objects of a case study; throws invalid_argument for unknown names. */
io::InputDocument builtin_document(std::string const& name);

report::CaseStudyReport run_case_study(std::string const& name, toric::EnumerationOptions const& options = {});

/* Laurent monomial in x, y, z, w with the given exponents, e.g. "x^-2z^2". */
std::string monomial_name(RationalVector const& exponents);

}  // namespace logcentre::cases

#endif
