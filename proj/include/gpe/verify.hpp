#pragma once

#include <iosfwd>
#include <string>

#include "gpe/fp.hpp"

namespace gpe {

struct VerifyOptions {
  i64 seed = 0;
  bool slow = false;  // enables the order-729 all-subgroup oracle run
  i64 scale_guard = i64(1) << 20;
};

// Run the cross-module invariant suite for a (p, e) pair, printing one line
// per check. Returns true iff every check passed.
bool verify_suite(i64 p, int e, const VerifyOptions& opt, std::ostream& os);

}  // namespace gpe
