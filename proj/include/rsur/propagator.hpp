#pragma once

#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "rsur/amplitude.hpp"
#include "rsur/grid.hpp"

// Free evolution in c = 1 units: each helicity amplitude picks up exp(-ikt),
// so <r^2>(t) is exactly quadratic in t with second derivative 2.

namespace rsur {

/// Position-space field at time t on the partner grid of `kgrid`.
FieldGrid evolve(const HelicityAmplitudePair& amps, const Grid3& kgrid, double t);

struct Trajectory {
    std::vector<double> times;
    std::vector<double> second_moments;  ///< <r^2>(t)
    std::vector<double> norms;           ///< N(t)
    double norm = 0.0;                   ///< N(times[0])
    bool truncated = false;              ///< boundary density above kTruncationThreshold at some time

    /// max |N(t) - N| / N.
    [[nodiscard]] double norm_drift() const;
};

/// Grid path: evolve, transform, take second moments.
Trajectory spreading_trajectory(const HelicityAmplitudePair& amps, const Grid3& kgrid, std::span<const double> times);

/// Analytic path: k-space quadrature of the evolved amplitude closures.
Trajectory analytic_trajectory(const HelicityAmplitudePair& amps, std::span<const double> times);

/// Least-squares alpha + beta t + gamma t^2.
struct QuadraticFit {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double residual = 0.0;  ///< rms residual relative to rms of the data

    [[nodiscard]] double acceleration() const { return 2.0 * gamma; }
};

/// Throws FitError for fewer than 5 samples or mismatched lengths.
QuadraticFit fit_quadratic(std::span<const double> t, std::span<const double> y);

void to_json(nlohmann::json& j, const Trajectory& tr);
void to_json(nlohmann::json& j, const QuadraticFit& fit);

/// t,second_moment,norm with 17 significant digits.
std::string trajectory_csv(const Trajectory& tr);

}  // namespace rsur
