#pragma once

#include <functional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "rsur/amplitude.hpp"
#include "rsur/grid.hpp"

// Second moments about the coordinate origin (no centroid subtraction):
//   Delta r^2 = int r^2 F*.F d^3r / int F*.F d^3r
//   Delta k^2 = int k^2 F~*.F~ d^3k / int F~*.F~ d^3k
// Translating a field therefore changes Delta r^2.

namespace rsur {

/// Lower bound on Delta r Delta k for the electromagnetic field.
inline constexpr double kElectromagneticBound = 2.5;

struct VarianceReport {
    double delta_r2 = 0.0;
    double delta_k2 = 0.0;
    double product = 0.0;
    double bound = kElectromagneticBound;
    double saturation_ratio = 0.0;
    double norm_r = 0.0;
    double norm_k = 0.0;
    bool truncation_warning = false;
};

void to_json(nlohmann::json& j, const VarianceReport& r);
void from_json(const nlohmann::json& j, VarianceReport& r);

using PositionField = std::function<CVec3(const Vec3&)>;

/// Grid path. The field should be sampled at t = 0 (caller's responsibility).
double variance_position(const FieldGrid& field_r);
double variance_kspace(const FieldGrid& field_k);

/// Position-space quadrature of a closed-form field over all of R^3;
/// `scale` is the length on which the field varies.
double variance_position(const PositionField& field, double scale);
double position_norm(const PositionField& field, double scale);

/// k-space form of Delta r^2 from the helicity amplitudes:
///   N Delta r^2 = int d^3k [ |f|^2/k_perp^2 + (2i kz/(k k_perp^2)) f* (kx d_ky - ky d_kx) f - f* Lap f ]
/// summed over f = f_+ and f = conj(f_-) (the negative-helicity amplitude
/// enters the azimuthal term conjugated, because it multiplies conj(e(k))).
double variance_position_from_amplitudes(const HelicityAmplitudePair& amps);

/// The three integrals above, unnormalised (real parts).
struct PositionVarianceTerms {
    double perp = 0.0;
    double azimuthal = 0.0;
    double laplacian = 0.0;
    double norm = 0.0;

    [[nodiscard]] double total() const { return (perp + azimuthal + laplacian) / norm; }
};

/// Throws AxisSingularityError when an amplitude does not vanish on the kz-axis.
PositionVarianceTerms position_variance_terms(const HelicityAmplitudePair& amps);

/// int k^2 (|f_+|^2 + |f_-|^2) / N.
double variance_kspace_from_amplitudes(const HelicityAmplitudePair& amps);

/// Helicity amplitudes sampled on a wavevector grid.
struct SampledAmplitudes {
    Grid3 kgrid;
    std::vector<cplx> plus;
    std::vector<cplx> minus;
};

SampledAmplitudes sample_amplitudes(const HelicityAmplitudePair& amps, const Grid3& kgrid);

/// Same integrand as above with Riemann sums on the grid; k-derivatives by
/// Fourier multipliers (multiplication by -i r in position space).
double variance_position_from_amplitudes(const SampledAmplitudes& amps);

/// Analytic path: quadrature over the amplitude closures. norm_r is computed
/// from `position_field` when given (position-space quadrature), otherwise as
/// int F~*.F~ d^3k from the synthesized k-space vector field.
VarianceReport uncertainty_product(const HelicityAmplitudePair& amps, const PositionField& position_field = {},
                                   double position_scale = 1.0);

/// Grid path from a Fourier pair of fields at t = 0.
VarianceReport uncertainty_product(const FieldGrid& field_r, const FieldGrid& field_k);

/// Grid path from one field; the partner is obtained by FFT.
VarianceReport uncertainty_product(const FieldGrid& field);

/// 1 + sqrt(1/4 + 2h) for helicity modulus h >= 0.
double massless_bound(double helicity);

/// Largest boundary-node density relative to the peak density.
double boundary_density_ratio(const FieldGrid& field);

/// Boundary density above which a grid result is flagged as truncated.
inline constexpr double kTruncationThreshold = 1e-8;

}  // namespace rsur
