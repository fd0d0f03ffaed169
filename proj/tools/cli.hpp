#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hardy::cli {

// Exit codes: 0 success with PASS, 1 usage or input error, 2 a verified
// claim failed (FAIL verdict, infeasible Pick problem, failed certification).
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitClaim = 2;

// args[0] is the program name. The report goes to `out` as one JSON document.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// 64-bit FNV-1a, hex encoded
std::string fnv1a_hex(const std::string& bytes);

}  // namespace hardy::cli
