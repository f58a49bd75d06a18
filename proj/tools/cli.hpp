#ifndef STRIPCLASS_TOOLS_CLI_HPP
#define STRIPCLASS_TOOLS_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace stripclass::cli {

inline constexpr const char* report_version = "1.0.0";

/// Exit statuses of the command-line front end.
enum ExitCode : int { exit_ok = 0, exit_violated = 1, exit_config = 2 };

struct RunConfig {
    std::string command;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<double> delta;
    std::size_t order = 256;
    double radius = 0.99;
    std::size_t grid_angles = 1024;
    std::uint64_t seed = 1;
    std::size_t samples = 10;
    double tolerance = 1e-9;
    std::string format = "json";
    std::optional<std::string> output;

    // polylog
    int s = 4;
    double z_re = 0.0;
    double z_im = 0.0;
    std::optional<double> theta;

    // generate: Schwarz function
    std::string schwarz = "scaled-rotation";
    double c_re = 1.0;
    double c_im = 0.0;
    int k = 1;
    double a_re = 0.0;
    double a_im = 0.0;
    double phi = 0.0;
};

/// Throws std::invalid_argument on an inconsistent configuration.
void validate(const RunConfig& config);

/// Executes one command. Reports go to `out` (or the configured output
/// file); structured error records go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and calls run().
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace stripclass::cli

#endif
