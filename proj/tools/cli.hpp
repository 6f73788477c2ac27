#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pdfharvest::cli {

enum ExitCode : int {
    Success = 0,
    UsageError = 1,
    InputError = 2,
};

/// Variables the CLI reads from the environment; injected for testing.
struct Environment {
    std::optional<std::string> workers; ///< PDFHARVEST_WORKERS
    static Environment from_process();
};

/// Entry point behind `pdfharvest`. `args` excludes the program name.
/// Standard output carries only the requested format; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env = Environment::from_process());

} // namespace pdfharvest::cli
