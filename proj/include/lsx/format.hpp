#pragma once

#include <string>
#include <vector>

#include "lsx/core.hpp"

namespace lsx {

/// Parsed form of a `.ls` structure file. The grammar is line-based:
///
///   structure NAME
///   elements N
///   mode table | rule
///   map {0 1} -> {0}          (table mode; one line per subset)
///   default identity | full | {0 2}
///   rule identity | full | empty   (rule mode)
///
/// '#' starts a comment; blank lines are ignored. Unspecified subsets take
/// the default; duplicate map lines are a parse error.
struct StructureFile {
  std::string name;
  int n = 0;
  bool table_mode = true;
  std::vector<TableEntry> entries;  // in file order
  DefaultRule default_rule = DefaultRule::Full;
  Mask named_default = 0;
  std::string rule_name;  // rule mode

  bool operator==(const StructureFile&) const = default;
};

StructureFile parse_structure_file(const std::string& text);
std::string serialize_structure_file(const StructureFile& file);
LogicalStructure to_structure(const StructureFile& file);

StructureFile load_structure_file(const std::string& path);

/// Arrow tables use a sibling line format:
///
///   arrow NAME
///   elements N
///   row 0 -> 1 0 2      (row a lists arrow(a, 0), arrow(a, 1), ...)
ArrowTable parse_arrow_file(const std::string& text);
ArrowTable load_arrow_file(const std::string& path);

/// Whitespace-insensitive token comparison, for round-trip checks.
std::vector<std::string> lex_tokens(const std::string& text);

}  // namespace lsx
