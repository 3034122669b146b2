#pragma once

#include <array>
#include <memory>
#include <vector>

#include "rsur/types.hpp"

namespace rsur {

/// Value, gradient and Laplacian of a scalar amplitude at one wavevector.
struct AmplitudeJet {
    cplx value{};
    std::array<cplx, 3> gradient{};
    cplx laplacian{};
};

/// A helicity amplitude f(k) given in closed form, with exact derivatives.
class Amplitude {
public:
    virtual ~Amplitude() = default;

    [[nodiscard]] virtual cplx value(const Vec3& k) const = 0;
    [[nodiscard]] virtual AmplitudeJet jet(const Vec3& k) const = 0;

    /// Radius in k-space outside of which |f| is below ~1e-16 of its peak.
    [[nodiscard]] virtual double support_radius() const = 0;
};

using AmplitudePtr = std::shared_ptr<const Amplitude>;

/// f_+(k) and f_-(k). A null pointer stands for the zero amplitude.
struct HelicityAmplitudePair {
    AmplitudePtr plus;
    AmplitudePtr minus;

    [[nodiscard]] double support_radius() const;
};

/// Factor that makes an amplitude vanish on the kz-axis.
enum class AxialFactor {
    Perp,      ///< k_perp = sqrt(kx^2 + ky^2)
    Raising,   ///< kx + i ky
    Lowering,  ///< kx - i ky
};

struct Monomial {
    int px = 0;
    int py = 0;
    int pz = 0;
    cplx coeff{1.0, 0.0};
};

/// exp(-sum_d (k_d - center_d)^2 / (2 width_d^2))
struct GaussianEnvelope {
    Vec3 center = Vec3::Zero();
    Vec3 width = Vec3::Ones();
};

/// f(k) = axial(k) * P(k) * envelope(k) with P a complex polynomial.
class GaussianPolynomialAmplitude final : public Amplitude {
public:
    GaussianPolynomialAmplitude(AxialFactor axial, std::vector<Monomial> polynomial, GaussianEnvelope envelope);

    [[nodiscard]] cplx value(const Vec3& k) const override;
    [[nodiscard]] AmplitudeJet jet(const Vec3& k) const override;
    [[nodiscard]] double support_radius() const override;

    [[nodiscard]] AxialFactor axial() const { return axial_; }
    [[nodiscard]] const std::vector<Monomial>& polynomial() const { return polynomial_; }
    [[nodiscard]] const GaussianEnvelope& envelope() const { return envelope_; }

private:
    AxialFactor axial_;
    std::vector<Monomial> polynomial_;
    GaussianEnvelope envelope_;
    int degree_ = 0;
};

/// f(lambda k).
class DilatedAmplitude final : public Amplitude {
public:
    DilatedAmplitude(AmplitudePtr base, double lambda);

    [[nodiscard]] cplx value(const Vec3& k) const override;
    [[nodiscard]] AmplitudeJet jet(const Vec3& k) const override;
    [[nodiscard]] double support_radius() const override;

private:
    AmplitudePtr base_;
    double lambda_;
};

/// factor * f(k).
class ScaledAmplitude final : public Amplitude {
public:
    ScaledAmplitude(AmplitudePtr base, cplx factor);

    [[nodiscard]] cplx value(const Vec3& k) const override;
    [[nodiscard]] AmplitudeJet jet(const Vec3& k) const override;
    [[nodiscard]] double support_radius() const override;

private:
    AmplitudePtr base_;
    cplx factor_;
};

/// f(k) exp(-i c k t): the amplitude carried to time t by the free evolution
/// (both helicity amplitudes pick up the same phase, c = 1).
class EvolvedAmplitude final : public Amplitude {
public:
    EvolvedAmplitude(AmplitudePtr base, double t);

    [[nodiscard]] cplx value(const Vec3& k) const override;
    [[nodiscard]] AmplitudeJet jet(const Vec3& k) const override;
    [[nodiscard]] double support_radius() const override;

private:
    AmplitudePtr base_;
    double t_;
};

/// k_perp * scale * exp(-a^2 k^2 / 2): the radial ground-state amplitude.
AmplitudePtr ground_state_amplitude(double a, cplx scale = 1.0);

HelicityAmplitudePair dilate(const HelicityAmplitudePair& amps, double lambda);
HelicityAmplitudePair evolve_amplitudes(const HelicityAmplitudePair& amps, double t);

}  // namespace rsur
