#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fuzzynf/dependency.hpp"

namespace fuzzynf {

/// Reads the relation CSV format:
///
///     supplier_name:atom,part_name:set,project_name:set
///     ABC,P1;P2,ProjX;ProjY
///
/// Cells are trimmed and may be wrapped in double quotes. Set cells split on
/// `;`; repeated labels collapse. Blank lines are skipped. Throws ParseError
/// with the offending line and column.
RelationInstance parse_relation(std::string_view text);

/// Canonical writer; parse_relation(render_relation(r)) reproduces r.
std::string render_relation(const RelationInstance& r);

/// Reads dependency declarations, one per line:
///
///     FD a,b -> c,d
///     MVD a ->> b,c
///     JD (a,b),(b,c),(a,c)
///
/// `#` starts a comment. Names are not resolved here; use validate().
std::vector<Dependency> parse_deps(std::string_view text);

/// Reads a component list such as `(a,b),(b,c)`.
std::vector<AttributeSubset> parse_components(std::string_view text);

}  // namespace fuzzynf
