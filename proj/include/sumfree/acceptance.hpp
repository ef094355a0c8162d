#pragma once

#include <ostream>
#include <string>

namespace sumfree {

// Runs the verification battery ("fast" or "full"), printing one PASS/FAIL
// line per criterion.  Returns the number of failed criteria.
int run_acceptance(const std::string& suite, std::ostream& out);

}  // namespace sumfree
