#ifndef FINFREE_POLY_IO_HPP
#define FINFREE_POLY_IO_HPP

#include <string>

#include "finfree/poly.hpp"

namespace finfree {

// Wire format used by every CLI command:
//   {"n": <int>, "e": ["<num>/<den>", ...]}
// with exact lowest-term coefficient strings.
std::string poly_to_json(const Poly& p);
Poly poly_from_json(const std::string& text);

}  // namespace finfree

#endif
