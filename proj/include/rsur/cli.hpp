#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rsur/types.hpp"

namespace rsur::cli {

enum ExitCode : int {
    kSuccess = 0,
    kCheckFailed = 1,
    kInputError = 2,
    kDegenerateField = 3,
    kResolution = 4,
    kTruncation = 5,
};

struct RunConfig {
    std::string command;

    double a = 1.0;
    // C_- = -C_+ (real) is the Gaussian simplest field up to normalisation
    cplx c_plus{-1.0, 0.0};
    cplx c_minus{1.0, 0.0};

    std::size_t grid = 64;
    double extent = 0.0;  ///< box edge in units of a; 0 picks the command default
    std::vector<double> times;  ///< units of a/c
    std::optional<double> tolerance;

    std::string input;
    std::string out;
    std::string format = "json";

    // verify-bound
    bool saturating = false;
    std::string path = "analytic";  ///< analytic | grid

    // spectrum
    double kappa_max = 10.0;
    std::size_t points = 2000;
    std::size_t states = 3;

    // field
    std::string kind = "saturating";  ///< saturating | simplest | photon-plus | photon-minus
    double time = 0.0;
    std::string profile;
};

/// Parses `args` (without the program name) and runs the selected command.
/// Reports go to `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_verify_bound(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_spectrum(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_field(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_spread(const RunConfig& config, std::ostream& out, std::ostream& err);

/// "re" or "re,im".
cplx parse_complex(const std::string& text);

/// Throws DomainError unless n is a power of two in [16, 256].
void validate_grid_size(std::size_t n);

}  // namespace rsur::cli
