#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace mgsim::cli {

/// Process exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitSimAbort = 3;

struct RunOptions {
    std::string scenario_path;
    std::string output_path;
    std::optional<std::string> model; ///< "averaged-boost" or "ideal-source"
    std::optional<double> plant_dt;
    std::optional<double> decimate;
};

/// `run`: simulate a scenario, write the CSV, print a per-segment summary.
/// No partial output file is left behind on failure.
int run_command(const RunOptions& options, std::ostream& out, std::ostream& err);

/// `verify`: simulate a scenario and check an expectation table, printing
/// one pass/fail line per row. Returns kExitOk only when every row passes.
int verify_command(const std::string& scenario_path, const std::string& expectations_path,
                   std::ostream& out, std::ostream& err);

} // namespace mgsim::cli
