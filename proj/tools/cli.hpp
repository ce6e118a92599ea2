#pragma once

#include <iosfwd>

namespace effdom::cli {

// Exit codes.
inline constexpr int kSolved = 0;
inline constexpr int kNoEd = 1;
inline constexpr int kNotInClass = 2;
inline constexpr int kError = 3;

// Whole command line, argv[0] included. Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace effdom::cli
