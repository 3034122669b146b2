#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

// Dimensionless radial problem
//   (1/2) [-g'' - (2/k) g' + 2 g / k^2 + k^2 g] = gamma g
// solved through u = k g:  -u''/2 + (1/k^2 + k^2/2) u = gamma u,  u(0) = 0,
// u(kappa_max) = 0. Exact spectrum gamma_n = 5/2 + 2n.

namespace rsur::radial {

struct RadialProblem {
    double kappa_max = 10.0;
    std::size_t n_points = 2000;  ///< interior nodes

    /// Throws ResolutionError unless kappa_max >= 8 and n_points >= 200.
    void validate() const;
    [[nodiscard]] double spacing() const { return kappa_max / static_cast<double>(n_points + 1); }
};

struct RadialSpectrum {
    RadialProblem problem;
    std::vector<double> kappa;                       ///< n_points + 2 nodes including both ends
    std::vector<double> eigenvalues;                 ///< ascending
    std::vector<std::vector<double>> eigenfunctions; ///< g(kappa), int k^2 g^2 = 1, positive near 0
    std::vector<double> residuals;                   ///< ||(H - gamma) u|| / ||u|| of the discrete operator
};

/// Lowest n_states eigenpairs. Throws ResolutionError if the grid cannot
/// resolve them (turning point too close to kappa_max, or too few points per
/// local wavelength).
RadialSpectrum solve_radial(const RadialProblem& problem, std::size_t n_states);

/// 5/2 + 2n.
double analytic_eigenvalue(unsigned n);

/// k exp(-k^2/2) L_n^{3/2}(k^2), unnormalised.
double analytic_eigenfunction(unsigned n, double kappa);

/// <g|H|g> / <g|g> as int [u'^2/2 + (1/k^2 + k^2/2) u^2] / int u^2, u = k g,
/// on a uniform grid (sixth-order differences, trapezoid rule).
/// Throws DegenerateNormError for a zero function.
double rayleigh_quotient(std::span<const double> kappa, std::span<const double> g);

/// Second-order Richardson step: (4 fine - coarse) / 3 for spacings h and h/2.
double richardson(double coarse, double fine);

/// Eigenvalues extrapolated from grids with n_points and 2 n_points + 1
/// interior nodes (exactly half the spacing).
std::vector<double> extrapolated_eigenvalues(const RadialProblem& problem, std::size_t n_states);

void to_json(nlohmann::json& j, const RadialSpectrum& s);

/// kappa,g0,g1,... with 17 significant digits.
std::string eigenfunctions_csv(const RadialSpectrum& s);

}  // namespace rsur::radial
