#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>

namespace gpslice {

// Exit codes: 0 every check passed, 1 a mathematical check failed, 2 usage or
// input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ull);

}  // namespace gpslice
