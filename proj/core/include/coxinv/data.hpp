#pragma once
// Access to the reference polynomial data compiled into the library.  Each
// entry is one canonical-format file (see format.hpp).  An override directory
// can replace entries by name (<name>.txt), which the verification tools use
// for data-corruption tests.

#include "coxinv/format.hpp"

#include <string>
#include <vector>

namespace coxinv {

// Raw text of an embedded entry; throws std::out_of_range for unknown names.
const std::string& golden_text(const std::string& name);

std::vector<std::string> golden_names();

// Install a directory whose <name>.txt files shadow embedded entries
// (empty string clears the override).
void set_golden_override_dir(const std::string& dir);

// Parsed form (respects the override directory).
GoldenFile golden_file(const std::string& name);

// Single-polynomial entries as a Poly over the given ring.
Poly golden_poly(const std::string& name, const RingPtr& ring);

}  // namespace coxinv
