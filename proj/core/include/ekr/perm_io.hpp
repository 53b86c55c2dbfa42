#pragma once

#include <string>
#include <string_view>

#include "ekr/perm.hpp"

namespace ekr {

// Disjoint-cycle notation with 1-based points: "(1 2 3)(5 6)". The identity
// prints as "()". Cycles are emitted with the smallest moved point first and
// cycles ordered by their smallest point, so printing is canonical.
std::string to_cycle_string(const Perm& p);

// Parses either disjoint cycles ("(1 2)(3 4)") or an explicit 0-based image
// table ("img: 1 0 3 2"). `degree` gives the ambient degree for the cycle
// form and must match the table length for the img form.
// Throws ParseError on malformed text, out-of-range or repeated points.
Perm parse_perm(std::string_view text, std::size_t degree);

}  // namespace ekr
