#ifndef ORBITALS_GROUP_IO_H_
#define ORBITALS_GROUP_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "orbitals/perm_group.h"

namespace orbitals {

// Group description text:
//
//   degree: 9
//   # comment
//   (1,2)
//   (1,4)(2,5)(3,6)
//
// The first meaningful line declares the degree; each further non-empty line
// not starting with '#' holds one generator in cycle notation. No generator
// lines means the trivial group. ';' separates lines as well as '\n', so a
// whole group fits in one command-line argument.
// Throws ParseError (with a line number) on malformed input.
PermGroup ParseGroup(std::string_view text);

PermGroup ReadGroupFile(const std::filesystem::path& path);

// Inverse of ParseGroup; one generator per line.
std::string FormatGroup(const PermGroup& group);

}  // namespace orbitals

#endif  // ORBITALS_GROUP_IO_H_
