#pragma once

#include <iosfwd>

namespace bcube::cli {

/// Exit status: 0 no violations, 1 a checked inequality failed, 2 usage,
/// input or file error.
int cliMain(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bcube::cli
