#pragma once

#include "rsur/amplitude.hpp"
#include "rsur/types.hpp"

// Closed-form minimal-uncertainty fields. Units: c = 1, lengths in the same
// unit as the scale a.
//
// The scalar generator is normalised as
//   G_+(r,t) = (1/2ar) [ D(l+) + D(l-) + i sqrt(pi)/2 (exp(-l+^2) - exp(-l-^2)) ],
//   l+- = (r +- t) / (sqrt(2) a),
// which is sqrt(pi/2) times  int d^3k / (4 pi^(3/2) k) exp(-a^2 k^2/2) exp(i(k.r - kt)).
// G_- = conj(G_+). The field of a SaturatingFieldSpec is
//   F = M [C_+ G_+ + conj(C_-) G_-],  M = (dx dz + i dy dt, dy dz - i dx dt, -dx^2 - dy^2),
// i.e. the field of the helicity amplitudes f_pm(k) = sqrt(pi/2) C_pm k_perp exp(-a^2 k^2/2).

namespace rsur::analytic {

/// Scale a and helicity coefficients of a saturating field.
struct SaturatingFieldSpec {
    double a = 1.0;
    cplx c_plus{1.0, 0.0};
    cplx c_minus{0.0, 0.0};
    double t = 0.0;

    /// Throws DomainError unless a > 0 and at least one coefficient is nonzero.
    void validate() const;
};

struct LightConeVars {
    double l_plus = 0.0;
    double l_minus = 0.0;
};

LightConeVars light_cone(double r, double t, double a);

enum class Helicity { Plus = 1, Minus = -1 };

inline int sign_of(Helicity h) {
    return static_cast<int>(h);
}

/// Below this radius (in units of a) every field is evaluated by its Taylor series in r.
inline constexpr double kSeriesRadius = 1e-3;

/// Coefficients for which the saturating field reduces to
/// simplest_field(r, C, a): C_+ = -C a^5 / sqrt(pi), C_- = conj(C) a^5 / sqrt(pi).
/// Real C gives a field of pure D (electric) type, imaginary C of pure B type.
SaturatingFieldSpec simplest_spec(cplx c, double a);

/// f_pm(k) = sqrt(pi/2) C_pm k_perp exp(-a^2 k^2 / 2), matching saturating_rs_field.
HelicityAmplitudePair saturating_amplitudes(const SaturatingFieldSpec& spec);

/// C exp(-r^2 / 2a^2) (y, -x, 0).
CVec3 simplest_field(const Vec3& r, cplx c, double a);

/// Fourier transform of simplest_field: -i C a^5 exp(-a^2 k^2 / 2) (ky, -kx, 0).
CVec3 simplest_field_kspace(const Vec3& k, cplx c, double a);

/// G_+ (Helicity::Plus) or G_- at radius r >= 0 and time t.
cplx scalar_generator(double r, double t, double a, Helicity which = Helicity::Plus);

/// C_+ G_+ + conj(C_-) G_-; spec.t is ignored in favour of the t argument.
cplx combined_generator(double r, double t, const SaturatingFieldSpec& spec);

/// M [C_+ G_+ + conj(C_-) G_-] evaluated analytically.
CVec3 saturating_rs_field(const Vec3& r, double t, const SaturatingFieldSpec& spec);

struct PhotonWavefunctions {
    CVec3 plus;
    CVec3 minus;
};

/// F_+ = C_+ M_+ G_+ and F_- = C_- M_- G_+, where M_pm carries +-i on the
/// time-derivative rows. They are the positive-frequency fields built from
/// e(k) f_+ and conj(e(k)) f_- respectively.
PhotonWavefunctions photon_wavefunctions(const Vec3& r, double t, const SaturatingFieldSpec& spec);

/// Explicit t = 0 components of M_h G_+ (unit coefficient) in Dawson and
/// exponential functions of r / (sqrt(2) a):
///   F_x = (-h sqrt(pi) y r^5 e - x z Q) / (2 a^5 r^5)
///   F_y = ( h sqrt(pi) x r^5 e - y z Q) / (2 a^5 r^5)
///   F_z = (sqrt(2) a r (rho^2 (a^2+r^2) - 2 a^2 z^2)
///          + 2 (2 a^2 z^2 (a^2+r^2) - (a^4+r^4) rho^2) D) / (2 a^5 r^5)
/// with e = exp(-r^2/2a^2), Q = sqrt(2) a r (3a^2+r^2) - 2 (3a^4+2a^2 r^2+r^4) D.
CVec3 explicit_t0_components(const Vec3& r, double a, Helicity h);

/// F cos(phi) + n x F sin(phi) + n (n.F)(1 - cos(phi)). Throws DomainError unless |n| = 1.
CVec3 rotate(const CVec3& f, const Vec3& n, double phi);

/// F cosh(psi) -+ i n x F sinh(psi) + n (n.F)(1 - cosh(psi)); upper sign for Helicity::Plus.
CVec3 boost(const CVec3& f, Helicity h, const Vec3& n, double psi);

namespace detail {

/// Radial derivative data of a generator G(r, t):
///   first = G_r / r,  second = (G_rr - G_r / r) / r^2,  mixed = G_rt / r,
/// so that d_i d_j G = delta_ij first + x_i x_j second and d_i d_t G = x_i mixed.
struct RadialDerivatives {
    cplx value{};
    cplx first{};
    cplx second{};
    cplx mixed{};
};

RadialDerivatives generator_closed_form(double r, double t, double a);
RadialDerivatives generator_series(double r, double t, double a);

/// Applies M_sigma (sigma = +-1 on the time-derivative rows) to derivative data.
CVec3 apply_derivative_matrix(const Vec3& r, const RadialDerivatives& d, int sigma);

CVec3 explicit_t0_closed_form(const Vec3& r, double a, Helicity h);

}  // namespace detail

}  // namespace rsur::analytic
