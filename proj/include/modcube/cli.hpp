#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "modcube/dlaw.hpp"

namespace modcube {

/// Runs one command. `args` excludes the program name. Returns 0 on
/// success, 1 on a domain error or an unproven diagram, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Law expressions for `verify`: d[I;J], unit[I] (d[I;eps]), runit[J]
/// (d[eps;J]), h(x,y) and v(x,y). Throws ParseError.
LawComposite parse_law_expr(const std::string& text, const CategoryMode& mode);

}  // namespace modcube
