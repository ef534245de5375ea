#pragma once

#include <ostream>

namespace frogsteg::cli {

/// Exit codes: 0 success, 1 I/O or decode failure, 2 validation or
/// capacity error, 3 integrity failure (wrong key / not a stego image).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace frogsteg::cli
