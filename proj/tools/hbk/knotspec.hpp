#pragma once

#include <string_view>

#include "hbk/emknot.hpp"

namespace hbk::cli {

// Parses the knot grammar "R:l,m,n,p" / "L:m,n,p" (whitespace-insensitive;
// the left form omits l and receives the stored placeholder).  Throws
// std::invalid_argument for grammar errors and InvalidKnotError, whose
// message names the violated clauses, for inadmissible parameters.
HandlebodyKnot parse_knot(std::string_view text);

}  // namespace hbk::cli
