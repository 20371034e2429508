#pragma once
// End-to-end arithmetic checks: the headline values every release must
// reproduce exactly, plus the property suites backing them. `selftest` and
// the standalone acceptance binary both run through here.
#include <ostream>

namespace lchain {

// Prints one verdict line per criterion; returns the number of failures.
int run_acceptance(std::ostream& out);

} // namespace lchain
