#pragma once

#include <string_view>

#include "mae/multipoly.hpp"

namespace mae {

// expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
// factor := base ('^' nonneg-int)?; base := rational | coordinate | '(' expr ')'.
// A leading sign on a term is accepted so that printed output always reparses.
MultiPoly parse_expr(std::string_view text);

}  // namespace mae
