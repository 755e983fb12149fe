#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace xsb::cli {

enum class Command { verify, check_product, reduce, search, interpolate, sample_nullform, sample_angle, comparability };

enum class OutputFormat { text, json };

/// Exit codes shared by every command.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;
inline constexpr int usage = 2;
inline constexpr int internal = 3;
} // namespace exit_code

struct RunConfig {
    Command command = Command::verify;
    std::string input_path;             // verify
    std::vector<std::string> literals;  // inline exponents or spaces
    std::uint64_t seed = 0;
    std::size_t samples = 100000;
    int grid = 4;
    std::string a = "1/2", b = "1/2", c = "1/2"; // angle exponents
    double constant = 1.0;                       // sample-angle C
    double mass = 1.0;                           // comparability m
    OutputFormat format = OutputFormat::text;    // of the text sink
    std::optional<std::string> json_path;        // "-" writes JSON to stdout
};

struct RunResult {
    int exit = exit_code::ok;
    std::string text;    // human-readable report
    std::string json;    // JSON report, always produced
};

/// Executes one command. Library errors on user input map to exit 2; invariant
/// breaches map to exit 3. Writes nothing.
RunResult run(const RunConfig& config);

/// Parses argv, runs, and writes the report to `out` (and the JSON file when
/// requested). Returns the exit code.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace xsb::cli
