#pragma once

#include "gralg/algebra.hpp"

#include <string>
#include <string_view>

namespace gralg {

// Line-oriented definition format:
//
//   algebra <name>
//   semigroup <tag>                      | semigroup inline <s1> <s2> ...
//                                          row <s> <s> ...   (one per element, inline only)
//   basis <label> <label> ...
//   degrees <s> <s> ...                  (semigroup label per basis label)
//   products
//   <i> <j> <k> <p/q>                    (0-based; basis_i * basis_j has coefficient p/q at basis_k)
//   end
//   unit <c_0> <c_1> ...                 (optional)
//
// '#' starts a comment. The parsed algebra must pass validate().
GradedAlgebra parse_algebra(std::string_view text);
GradedAlgebra load_algebra_file(const std::string& path);
std::string to_text(const GradedAlgebra& a);

// Either "catalog:<spec>" or a path to a definition file.
GradedAlgebra resolve_algebra(const std::string& ref);

} // namespace gralg
