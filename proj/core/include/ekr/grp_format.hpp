#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "ekr/group.hpp"

namespace ekr {

// Text format for permutation groups:
//
//   # optional comments anywhere
//   degree 10
//   name a5-pairs            (optional)
//   (1 2 3 4 5)(6 7 8 9 10)  one generator per line, 1-based cycles...
//   img: 1 0 3 2 5 4 7 6 9 8 ...or a 0-based image table
//
// The first non-comment line must be the degree line. Parse errors carry the
// 1-based line number.
PermGroup read_grp(std::istream& in, std::uint64_t cap = kDefaultOrderCap);
PermGroup read_grp_file(const std::filesystem::path& path,
                        std::uint64_t cap = kDefaultOrderCap);

// Writes generators in cycle notation. read(write(g)) reproduces the same
// degree, name, generator list, and element set.
void write_grp(std::ostream& out, const PermGroup& g,
               const std::string& comment = {});
void write_grp_file(const std::filesystem::path& path, const PermGroup& g,
                    const std::string& comment = {});

}  // namespace ekr
