#include "rsur/analytic_fields.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "rsur/errors.hpp"
#include "rsur/specfun.hpp"

namespace rsur::analytic {
namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr cplx kI{0.0, 1.0};

// Series in r uses c_j for j <= kSeriesTerms; needs Y derivatives up to 2*kSeriesTerms + 2.
constexpr int kSeriesTerms = 5;
constexpr int kMaxOrder = 2 * kSeriesTerms + 2;

void require_scale(double a) {
    if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("scale a must be positive and finite");
}

// Y(w) = D(w) + i sqrt(pi)/2 exp(-w^2) satisfies Y' = 1 - 2wY, so
// Y^(n+1) = -2w Y^(n) - 2n Y^(n-1) for n >= 1.
std::array<cplx, kMaxOrder + 1> y_derivatives(double w, int order) {
    std::array<cplx, kMaxOrder + 1> y{};
    y[0] = cplx(specfun::dawson(w), 0.5 * kSqrtPi * std::exp(-w * w));
    if (order >= 1) y[1] = 1.0 - 2.0 * w * y[0];
    for (int n = 1; n < order; ++n) y[n + 1] = -2.0 * w * y[n] - 2.0 * static_cast<double>(n) * y[n - 1];
    return y;
}

// P(s) = Y(s / (sqrt(2) a)) / (2a) and its first two derivatives in s.
std::array<cplx, 3> p_jet(double s, double a) {
    const double scale = kSqrt2 * a;
    const auto y = y_derivatives(s / scale, 2);
    const double base = 1.0 / (2.0 * a);
    return {base * y[0], base / scale * y[1], base / (scale * scale) * y[2]};
}

detail::RadialDerivatives conjugated(const detail::RadialDerivatives& d) {
    return {std::conj(d.value), std::conj(d.first), std::conj(d.second), std::conj(d.mixed)};
}

detail::RadialDerivatives derivatives(double r, double t, double a) {
    return r < kSeriesRadius * a ? detail::generator_series(r, t, a) : detail::generator_closed_form(r, t, a);
}

void require_position(const Vec3& r) {
    if (!r.allFinite()) throw DomainError("position must be finite");
}

}  // namespace

void SaturatingFieldSpec::validate() const {
    require_scale(a);
    if (c_plus == cplx{} && c_minus == cplx{}) throw DomainError("at least one of C_+, C_- must be nonzero");
    if (!std::isfinite(t)) throw DomainError("time must be finite");
}

LightConeVars light_cone(double r, double t, double a) {
    require_scale(a);
    return {(r + t) / (kSqrt2 * a), (r - t) / (kSqrt2 * a)};
}

SaturatingFieldSpec simplest_spec(cplx c, double a) {
    require_scale(a);
    if (c == cplx{}) throw DomainError("simplest_spec: C must be nonzero");
    const double a5 = std::pow(a, 5);
    return SaturatingFieldSpec{a, -c * a5 / kSqrtPi, std::conj(c) * a5 / kSqrtPi, 0.0};
}

HelicityAmplitudePair saturating_amplitudes(const SaturatingFieldSpec& spec) {
    spec.validate();
    const double norm = std::sqrt(std::numbers::pi / 2.0);
    HelicityAmplitudePair out;
    if (spec.c_plus != cplx{}) out.plus = ground_state_amplitude(spec.a, norm * spec.c_plus);
    if (spec.c_minus != cplx{}) out.minus = ground_state_amplitude(spec.a, norm * spec.c_minus);
    return out;
}

CVec3 simplest_field(const Vec3& r, cplx c, double a) {
    require_scale(a);
    const cplx g = c * std::exp(-r.squaredNorm() / (2.0 * a * a));
    return {g * r.y(), -g * r.x(), 0.0};
}

CVec3 simplest_field_kspace(const Vec3& k, cplx c, double a) {
    require_scale(a);
    const cplx g = -kI * c * std::pow(a, 5) * std::exp(-0.5 * a * a * k.squaredNorm());
    return {g * k.y(), -g * k.x(), 0.0};
}

namespace detail {

RadialDerivatives generator_closed_form(double r, double t, double a) {
    require_scale(a);
    if (!(r > 0.0)) throw DomainError("generator_closed_form needs r > 0");
    const auto out = p_jet(t + r, a);
    const auto in = p_jet(t - r, a);
    const cplx phi = out[0] - in[0];
    const cplx phi_r = out[1] + in[1];
    const cplx phi_rr = out[2] - in[2];
    const cplx phi_t = out[1] - in[1];
    const cplx phi_rt = out[2] + in[2];
    const double r2 = r * r, r3 = r2 * r;
    RadialDerivatives d;
    d.value = phi / r;
    d.first = phi_r / r2 - phi / r3;
    d.second = (phi_rr / r - 3.0 * phi_r / r2 + 3.0 * phi / r3) / r2;
    d.mixed = phi_rt / r2 - phi_t / r3;
    return d;
}

RadialDerivatives generator_series(double r, double t, double a) {
    require_scale(a);
    if (r < 0.0) throw DomainError("generator_series needs r >= 0");
    // G = (P(t+r) - P(t-r)) / r = sum_j c_j r^(2j),  c_j = 2 P^(2j+1)(t) / (2j+1)!
    const double scale = kSqrt2 * a;
    const auto y = y_derivatives(t / scale, kMaxOrder);
    std::array<cplx, kMaxOrder + 1> p{};
    double factor = 1.0 / (2.0 * a);
    for (int m = 0; m <= kMaxOrder; ++m) {
        p[m] = factor * y[m];
        factor /= scale;
    }
    std::array<cplx, kSeriesTerms + 1> c{}, ct{};
    double fact = 1.0;  // (2j+1)!
    for (int j = 0; j <= kSeriesTerms; ++j) {
        if (j > 0) fact *= static_cast<double>(2 * j) * static_cast<double>(2 * j + 1);
        c[j] = 2.0 * p[2 * j + 1] / fact;
        ct[j] = 2.0 * p[2 * j + 2] / fact;
    }
    const double r2 = r * r;
    RadialDerivatives d;
    double pw = 1.0;
    for (int j = 0; j < kSeriesTerms; ++j, pw *= r2) d.value += c[j] * pw;
    pw = 1.0;
    for (int j = 1; j <= kSeriesTerms; ++j, pw *= r2) {
        d.first += 2.0 * j * c[j] * pw;
        d.mixed += 2.0 * j * ct[j] * pw;
    }
    pw = 1.0;
    for (int j = 2; j <= kSeriesTerms; ++j, pw *= r2) d.second += 2.0 * j * (2.0 * j - 2.0) * c[j] * pw;
    return d;
}

CVec3 apply_derivative_matrix(const Vec3& r, const RadialDerivatives& d, int sigma) {
    const double x = r.x(), y = r.y(), z = r.z();
    const cplx is = kI * static_cast<double>(sigma);
    return {x * z * d.second + is * y * d.mixed, y * z * d.second - is * x * d.mixed,
            -(2.0 * d.first + (x * x + y * y) * d.second)};
}

CVec3 explicit_t0_closed_form(const Vec3& rv, double a, Helicity h) {
    require_scale(a);
    const double x = rv.x(), y = rv.y(), z = rv.z();
    const double r2 = rv.squaredNorm(), r = std::sqrt(r2);
    if (!(r > 0.0)) throw DomainError("explicit_t0_closed_form needs r > 0");
    const double a2 = a * a, a4 = a2 * a2;
    const double rho2 = x * x + y * y;
    const double dw = specfun::dawson(r / (kSqrt2 * a));
    const double e = std::exp(-r2 / (2.0 * a2));
    const double r5 = r2 * r2 * r;
    const double den = 2.0 * a4 * a * r5;
    const double hs = static_cast<double>(sign_of(h));
    const double q = kSqrt2 * a * r * (3.0 * a2 + r2) - 2.0 * (3.0 * a4 + 2.0 * a2 * r2 + r2 * r2) * dw;
    const double fx = (-hs * kSqrtPi * y * r5 * e - x * z * q) / den;
    const double fy = (hs * kSqrtPi * x * r5 * e - y * z * q) / den;
    const double fz = (kSqrt2 * a * r * (rho2 * (a2 + r2) - 2.0 * a2 * z * z) +
                       2.0 * (2.0 * a2 * z * z * (a2 + r2) - (a4 + r2 * r2) * rho2) * dw) /
                      den;
    return {fx, fy, fz};
}

}  // namespace detail

cplx scalar_generator(double r, double t, double a, Helicity which) {
    require_scale(a);
    if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("scalar_generator: r must be finite and >= 0");
    if (!std::isfinite(t)) throw DomainError("scalar_generator: t must be finite");
    const cplx g = derivatives(r, t, a).value;
    return which == Helicity::Plus ? g : std::conj(g);
}

cplx combined_generator(double r, double t, const SaturatingFieldSpec& spec) {
    spec.validate();
    const cplx g = scalar_generator(r, t, spec.a, Helicity::Plus);
    return spec.c_plus * g + std::conj(spec.c_minus) * std::conj(g);
}

CVec3 saturating_rs_field(const Vec3& r, double t, const SaturatingFieldSpec& spec) {
    spec.validate();
    require_position(r);
    if (!std::isfinite(t)) throw DomainError("saturating_rs_field: t must be finite");
    const auto dp = derivatives(r.norm(), t, spec.a);
    const auto dm = conjugated(dp);
    const cplx cm = std::conj(spec.c_minus);
    const detail::RadialDerivatives d{spec.c_plus * dp.value + cm * dm.value, spec.c_plus * dp.first + cm * dm.first,
                                      spec.c_plus * dp.second + cm * dm.second,
                                      spec.c_plus * dp.mixed + cm * dm.mixed};
    return detail::apply_derivative_matrix(r, d, +1);
}

PhotonWavefunctions photon_wavefunctions(const Vec3& r, double t, const SaturatingFieldSpec& spec) {
    spec.validate();
    require_position(r);
    if (!std::isfinite(t)) throw DomainError("photon_wavefunctions: t must be finite");
    const auto d = derivatives(r.norm(), t, spec.a);
    return {spec.c_plus * detail::apply_derivative_matrix(r, d, +1),
            spec.c_minus * detail::apply_derivative_matrix(r, d, -1)};
}

CVec3 explicit_t0_components(const Vec3& r, double a, Helicity h) {
    require_scale(a);
    require_position(r);
    const double rn = r.norm();
    if (rn < kSeriesRadius * a) {
        return detail::apply_derivative_matrix(r, detail::generator_series(rn, 0.0, a), sign_of(h));
    }
    return detail::explicit_t0_closed_form(r, a, h).cast<cplx>();
}

namespace {

void require_unit_axis(const Vec3& n) {
    if (!n.allFinite() || std::fabs(n.norm() - 1.0) > 1e-12) throw DomainError("axis must be a unit vector");
}

}  // namespace

CVec3 rotate(const CVec3& f, const Vec3& n, double phi) {
    require_unit_axis(n);
    const CVec3 nc = n.cast<cplx>();
    const cplx along = nc.dot(f);  // n real, so no conjugation issue
    return f * std::cos(phi) + cross(nc, f) * std::sin(phi) + nc * along * (1.0 - std::cos(phi));
}

CVec3 boost(const CVec3& f, Helicity h, const Vec3& n, double psi) {
    require_unit_axis(n);
    const CVec3 nc = n.cast<cplx>();
    const cplx along = nc.dot(f);
    const double s = static_cast<double>(sign_of(h));
    return f * std::cosh(psi) - s * kI * cross(nc, f) * std::sinh(psi) + nc * along * (1.0 - std::cosh(psi));
}

}  // namespace rsur::analytic
