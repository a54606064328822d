#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "uhsl2/element.hpp"
#include "uhsl2/species.hpp"

namespace uhsl2 {

enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitUsage = 2 };

/// "a,b,c,d" -> exponent tuple. Throws UsageError.
NormalMonomial parse_exponents(std::string_view text);

/// "m(a,b,c,d)", a generator letter, or "exp(g)". Throws UsageError.
FunctorSpec parse_functor(std::string_view text);

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns one of the ExitCode values.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uhsl2
