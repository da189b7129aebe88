#pragma once

#include <ostream>

namespace ewens {

// Fast built-in invariant suite (exact identities, series cross-checks,
// small sweeps).  Prints one line per check to out and returns the number
// of failures, so 0 means healthy.
int run_seed_check(std::ostream& out);

}  // namespace ewens
