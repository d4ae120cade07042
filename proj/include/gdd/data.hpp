#pragma once

#include "gdd/design.hpp"

namespace gdd {

// Embedded golden pairs for (3,4,1), (3,4,5), (3,4,7) in the standard
// g^t u^1 layout. Returns false when the triple is not embedded.
bool embedded_pair(int g, int t, int u, DesignPair& out);

}  // namespace gdd
