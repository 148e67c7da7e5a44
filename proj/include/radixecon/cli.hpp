#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "radixecon/economy.hpp"

namespace radixecon::cli {

/// Parse and execute one command line. Results go to `out`, diagnostics to
/// `err`. Returns the process exit status: 0 on success, 2 on a usage or
/// parse error, 1 on a domain or I/O error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, from bare arguments without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Print the table of E2-optimal radices for the six reference upper bounds
/// C in {e, 10, 50, 200, 500, 1000}, each recomputed by e2_optimal_radix and
/// printed to four decimals. Throws std::runtime_error if a solve fails to
/// converge.
void emit_table(std::ostream& out);

/// Write a sampled cost curve as CSV (header "r,cost", one row per sample,
/// values to nine significant digits). The file is written to a temporary
/// name next to `destination` and renamed into place, so a failed run leaves
/// no partial file behind.
void emit_curve(CostModel model, double upper_bound, double r_min, double r_max,
                int steps, const std::filesystem::path& destination);

/// Same curve, streamed instead of written to a file.
void emit_curve(CostModel model, double upper_bound, double r_min, double r_max,
                int steps, std::ostream& out);

}  // namespace radixecon::cli
