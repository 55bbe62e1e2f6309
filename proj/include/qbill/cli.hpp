#pragma once

#include <iosfwd>

namespace qbill::cli {

// Exit codes: 0 success, 1 selftest failure, 2 malformed input, 3 recognition reject.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

int selftest(int max_n, std::ostream& out);

}  // namespace qbill::cli
