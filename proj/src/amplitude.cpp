#include "rsur/amplitude.hpp"

#include <algorithm>
#include <cmath>

#include "rsur/errors.hpp"

namespace rsur {
namespace {

double ipow(double x, int n) {
    if (n < 0) return 0.0;
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

constexpr cplx kI{0.0, 1.0};

}  // namespace

double HelicityAmplitudePair::support_radius() const {
    double r = 0.0;
    if (plus) r = std::max(r, plus->support_radius());
    if (minus) r = std::max(r, minus->support_radius());
    return r;
}

GaussianPolynomialAmplitude::GaussianPolynomialAmplitude(AxialFactor axial, std::vector<Monomial> polynomial,
                                                         GaussianEnvelope envelope)
    : axial_(axial), polynomial_(std::move(polynomial)), envelope_(std::move(envelope)) {
    for (int d = 0; d < 3; ++d) {
        if (!(envelope_.width[d] > 0.0)) throw DomainError("GaussianPolynomialAmplitude: widths must be positive");
    }
    for (const auto& m : polynomial_) {
        if (m.px < 0 || m.py < 0 || m.pz < 0) throw DomainError("GaussianPolynomialAmplitude: negative power");
        degree_ = std::max(degree_, m.px + m.py + m.pz);
    }
}

cplx GaussianPolynomialAmplitude::value(const Vec3& k) const {
    if (axial_ == AxialFactor::Perp && k.x() == 0.0 && k.y() == 0.0) return {};
    return jet(k).value;
}

AmplitudeJet GaussianPolynomialAmplitude::jet(const Vec3& k) const {
    // axial factor S
    cplx s;
    std::array<cplx, 3> grad_s{};
    cplx lap_s{};
    switch (axial_) {
        case AxialFactor::Perp: {
            const double kp = std::hypot(k.x(), k.y());
            if (kp == 0.0) throw AxisSingularityError("k_perp amplitude differentiated on the kz-axis");
            s = kp;
            grad_s = {k.x() / kp, k.y() / kp, 0.0};
            lap_s = 1.0 / kp;
            break;
        }
        case AxialFactor::Raising:
            s = cplx(k.x(), k.y());
            grad_s = {1.0, kI, 0.0};
            break;
        case AxialFactor::Lowering:
            s = cplx(k.x(), -k.y());
            grad_s = {1.0, -kI, 0.0};
            break;
    }

    // polynomial P
    cplx p{};
    std::array<cplx, 3> grad_p{};
    cplx lap_p{};
    for (const auto& m : polynomial_) {
        const double x0 = ipow(k.x(), m.px), y0 = ipow(k.y(), m.py), z0 = ipow(k.z(), m.pz);
        const double x1 = m.px * ipow(k.x(), m.px - 1);
        const double y1 = m.py * ipow(k.y(), m.py - 1);
        const double z1 = m.pz * ipow(k.z(), m.pz - 1);
        const double x2 = m.px * (m.px - 1) * ipow(k.x(), m.px - 2);
        const double y2 = m.py * (m.py - 1) * ipow(k.y(), m.py - 2);
        const double z2 = m.pz * (m.pz - 1) * ipow(k.z(), m.pz - 2);
        p += m.coeff * (x0 * y0 * z0);
        grad_p[0] += m.coeff * (x1 * y0 * z0);
        grad_p[1] += m.coeff * (x0 * y1 * z0);
        grad_p[2] += m.coeff * (x0 * y0 * z1);
        lap_p += m.coeff * (x2 * y0 * z0 + x0 * y2 * z0 + x0 * y0 * z2);
    }

    // envelope E
    double exponent = 0.0;
    std::array<double, 3> dlog{};
    double lap_log_sq = 0.0;
    for (int d = 0; d < 3; ++d) {
        const double w2 = envelope_.width[d] * envelope_.width[d];
        const double dev = k[d] - envelope_.center[d];
        exponent += dev * dev / (2.0 * w2);
        dlog[d] = -dev / w2;
        lap_log_sq += dlog[d] * dlog[d] - 1.0 / w2;
    }
    const double e = std::exp(-exponent);

    AmplitudeJet out;
    out.value = s * p * e;
    cplx cross{};
    for (int d = 0; d < 3; ++d) {
        out.gradient[d] = (grad_s[d] * p + s * grad_p[d] + s * p * dlog[d]) * e;
        cross += grad_s[d] * grad_p[d] + grad_s[d] * dlog[d] * p + s * grad_p[d] * dlog[d];
    }
    out.laplacian = (lap_s * p + s * lap_p + s * p * lap_log_sq + 2.0 * cross) * e;
    return out;
}

double GaussianPolynomialAmplitude::support_radius() const {
    // exp(-x^2/2) < 1e-18 for x > 9.1; allow for polynomial growth
    const double wmax = envelope_.width.maxCoeff();
    return envelope_.center.norm() + wmax * (9.5 + 0.5 * (degree_ + 1));
}

DilatedAmplitude::DilatedAmplitude(AmplitudePtr base, double lambda) : base_(std::move(base)), lambda_(lambda) {
    if (!base_) throw DomainError("DilatedAmplitude: null base");
    if (!(lambda_ > 0.0)) throw DomainError("DilatedAmplitude: lambda must be positive");
}

cplx DilatedAmplitude::value(const Vec3& k) const {
    return base_->value(lambda_ * k);
}

AmplitudeJet DilatedAmplitude::jet(const Vec3& k) const {
    AmplitudeJet j = base_->jet(lambda_ * k);
    for (auto& g : j.gradient) g *= lambda_;
    j.laplacian *= lambda_ * lambda_;
    return j;
}

double DilatedAmplitude::support_radius() const {
    return base_->support_radius() / lambda_;
}

ScaledAmplitude::ScaledAmplitude(AmplitudePtr base, cplx factor) : base_(std::move(base)), factor_(factor) {
    if (!base_) throw DomainError("ScaledAmplitude: null base");
}

cplx ScaledAmplitude::value(const Vec3& k) const {
    return factor_ * base_->value(k);
}

AmplitudeJet ScaledAmplitude::jet(const Vec3& k) const {
    AmplitudeJet j = base_->jet(k);
    j.value *= factor_;
    for (auto& g : j.gradient) g *= factor_;
    j.laplacian *= factor_;
    return j;
}

double ScaledAmplitude::support_radius() const {
    return base_->support_radius();
}

EvolvedAmplitude::EvolvedAmplitude(AmplitudePtr base, double t) : base_(std::move(base)), t_(t) {
    if (!base_) throw DomainError("EvolvedAmplitude: null base");
    if (!std::isfinite(t_)) throw DomainError("EvolvedAmplitude: time must be finite");
}

cplx EvolvedAmplitude::value(const Vec3& k) const {
    return base_->value(k) * std::polar(1.0, -k.norm() * t_);
}

AmplitudeJet EvolvedAmplitude::jet(const Vec3& k) const {
    const double kk = k.norm();
    const AmplitudeJet b = base_->jet(k);
    const cplx phase = std::polar(1.0, -kk * t_);
    AmplitudeJet out;
    out.value = b.value * phase;
    if (kk == 0.0) {
        // grad(exp(-ikt)) is undefined at the origin; only reachable by a node exactly at k = 0
        throw DomainError("EvolvedAmplitude: derivatives undefined at k = 0");
    }
    cplx radial_derivative{};
    for (int d = 0; d < 3; ++d) {
        const double unit = k[d] / kk;
        out.gradient[d] = (b.gradient[d] - kI * t_ * unit * b.value) * phase;
        radial_derivative += unit * b.gradient[d];
    }
    out.laplacian = (b.laplacian - 2.0 * kI * t_ * radial_derivative - 2.0 * kI * t_ / kk * b.value -
                     t_ * t_ * b.value) *
                    phase;
    return out;
}

double EvolvedAmplitude::support_radius() const {
    return base_->support_radius();
}

AmplitudePtr ground_state_amplitude(double a, cplx scale) {
    if (!(a > 0.0)) throw DomainError("ground_state_amplitude: a must be positive");
    GaussianEnvelope env;
    env.width = Vec3::Constant(1.0 / a);
    return std::make_shared<GaussianPolynomialAmplitude>(AxialFactor::Perp, std::vector<Monomial>{{0, 0, 0, scale}},
                                                         env);
}

HelicityAmplitudePair dilate(const HelicityAmplitudePair& amps, double lambda) {
    HelicityAmplitudePair out;
    if (amps.plus) out.plus = std::make_shared<DilatedAmplitude>(amps.plus, lambda);
    if (amps.minus) out.minus = std::make_shared<DilatedAmplitude>(amps.minus, lambda);
    return out;
}

HelicityAmplitudePair evolve_amplitudes(const HelicityAmplitudePair& amps, double t) {
    HelicityAmplitudePair out;
    if (amps.plus) out.plus = std::make_shared<EvolvedAmplitude>(amps.plus, t);
    if (amps.minus) out.minus = std::make_shared<EvolvedAmplitude>(amps.minus, t);
    return out;
}

}  // namespace rsur
