#include "rsur/kspace.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <fftw3.h>

#include "rsur/errors.hpp"
#include "rsur/quadrature.hpp"

namespace rsur {

double WaveVector::magnitude() const {
    return std::sqrt(kx * kx + ky * ky + kz * kz);
}

double WaveVector::perp() const {
    return std::hypot(kx, ky);
}

CVec3 polarization(const WaveVector& k) {
    const double kk = k.magnitude();
    const double kp2 = k.kx * k.kx + k.ky * k.ky;
    const double kp = std::sqrt(kp2);
    if (!(kp > kAxisTolerance * kk) || kk == 0.0) {
        throw AxisSingularityError("polarization vector is undefined on the kz-axis");
    }
    const double scale = 1.0 / (std::sqrt(2.0) * kk * kp);
    return CVec3(cplx(-k.kx * k.kz, k.ky * kk), cplx(-k.ky * k.kz, -k.kx * kk), cplx(kp2, 0.0)) * scale;
}

FieldGrid synthesize_kspace(const HelicityAmplitudePair& amps, const Grid3& kgrid, double t) {
    if (!std::isfinite(t)) throw DomainError("synthesize_kspace: time must be finite");
    return FieldGrid::sample(kgrid, Space::Wavevector, [&](const Vec3& k) {
        const WaveVector wv(k);
        const CVec3 e = polarization(wv);
        const double kk = wv.magnitude();
        CVec3 out = CVec3::Zero();
        if (amps.plus) out += e * (amps.plus->value(k) * std::polar(1.0, -kk * t));
        if (amps.minus) out += e.conjugate() * (std::conj(amps.minus->value(-k)) * std::polar(1.0, kk * t));
        return out;
    });
}

std::vector<cplx> shifted_dft(std::span<const cplx> in, const Grid3& from, const Grid3& to, std::size_t components,
                              int sign) {
    if (!from.is_fourier_pair(to)) throw ShapeError("grids are not a Fourier pair");
    if (in.size() != from.size() * components) throw ShapeError("shifted_dft: data size does not match grid");
    const double s = sign < 0 ? -1.0 : 1.0;

    // out_j = C sum_m in_m exp(s i (a0 + m da)(b0 + j db)), per axis
    std::array<std::vector<cplx>, 3> pre, post;
    double scale = std::pow(2.0 * std::numbers::pi, -1.5);
    for (std::size_t d = 0; d < 3; ++d) {
        const Axis& a = from.axis(d);
        const Axis& b = to.axis(d);
        pre[d].resize(a.count);
        post[d].resize(b.count);
        for (std::size_t m = 0; m < a.count; ++m) {
            pre[d][m] = std::polar(1.0, s * static_cast<double>(m) * a.spacing * b.origin);
        }
        for (std::size_t j = 0; j < b.count; ++j) {
            post[d][j] = std::polar(1.0, s * (a.origin * b.origin + static_cast<double>(j) * b.spacing * a.origin));
        }
        scale *= a.spacing;
    }

    const std::size_t nx = from.axis(0).count, ny = from.axis(1).count, nz = from.axis(2).count;
    auto* buffer = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * in.size()));
    if (buffer == nullptr) throw std::bad_alloc();
    auto* data = reinterpret_cast<cplx*>(buffer);

    std::size_t flat = 0;
    for (std::size_t k = 0; k < nz; ++k) {
        for (std::size_t j = 0; j < ny; ++j) {
            const cplx pjk = pre[1][j] * pre[2][k];
            for (std::size_t i = 0; i < nx; ++i, ++flat) {
                const cplx p = pre[0][i] * pjk;
                for (std::size_t c = 0; c < components; ++c) data[flat * components + c] = in[flat * components + c] * p;
            }
        }
    }

    const int dims[3] = {static_cast<int>(nz), static_cast<int>(ny), static_cast<int>(nx)};
    const int howmany = static_cast<int>(components);
    fftw_plan plan = fftw_plan_many_dft(3, dims, howmany, buffer, nullptr, howmany, 1, buffer, nullptr, howmany, 1,
                                        sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);

    std::vector<cplx> out(in.size());
    flat = 0;
    for (std::size_t k = 0; k < nz; ++k) {
        for (std::size_t j = 0; j < ny; ++j) {
            const cplx pjk = post[1][j] * post[2][k] * scale;
            for (std::size_t i = 0; i < nx; ++i, ++flat) {
                const cplx p = post[0][i] * pjk;
                for (std::size_t c = 0; c < components; ++c) out[flat * components + c] = data[flat * components + c] * p;
            }
        }
    }
    fftw_free(buffer);
    return out;
}

FieldGrid fourier_to_position(const FieldGrid& field_k) {
    return fourier_to_position(field_k, field_k.grid().reciprocal());
}

FieldGrid fourier_to_position(const FieldGrid& field_k, const Grid3& rgrid) {
    if (field_k.space() != Space::Wavevector) throw ShapeError("fourier_to_position: input is not a k-space field");
    return FieldGrid(rgrid, Space::Position, shifted_dft(field_k.values(), field_k.grid(), rgrid, 3, +1));
}

FieldGrid fourier_to_kspace(const FieldGrid& field_r) {
    return fourier_to_kspace(field_r, field_r.grid().reciprocal());
}

FieldGrid fourier_to_kspace(const FieldGrid& field_r, const Grid3& kgrid) {
    if (field_r.space() != Space::Position) throw ShapeError("fourier_to_kspace: input is not a position field");
    return FieldGrid(kgrid, Space::Wavevector, shifted_dft(field_r.values(), field_r.grid(), kgrid, 3, -1));
}

double norm(const HelicityAmplitudePair& amps) {
    if (!amps.plus && !amps.minus) throw DegenerateNormError("norm: both helicity amplitudes are zero");
    const auto rule = quadrature::SphericalRule::ball(amps.support_radius());
    const double n = rule.integrate([&](const Vec3& k) {
        double s = 0.0;
        if (amps.plus) s += std::norm(amps.plus->value(k));
        if (amps.minus) s += std::norm(amps.minus->value(k));
        return s;
    });
    if (!(n > 0.0) || !std::isfinite(n)) throw DegenerateNormError("norm: amplitudes have zero norm");
    return n;
}

double norm(const FieldGrid& field) {
    const double n = field.energy();
    if (!(n > 0.0) || !std::isfinite(n)) throw DegenerateNormError("norm: field has zero norm");
    return n;
}

FieldGrid spectral_curl(const FieldGrid& field_k) {
    if (field_k.space() != Space::Wavevector) throw ShapeError("spectral_curl: input is not a k-space field");
    const Grid3& g = field_k.grid();
    std::vector<cplx> out(field_k.values().size());
    for (std::size_t n = 0; n < g.size(); ++n) {
        const Vec3 k = g.point(n);
        const CVec3 v = field_k.at(n);
        const CVec3 c = cplx(0.0, 1.0) * cross(k.cast<cplx>(), v);
        out[3 * n] = c.x();
        out[3 * n + 1] = c.y();
        out[3 * n + 2] = c.z();
    }
    return FieldGrid(g, Space::Wavevector, std::move(out));
}

double transversality_residual(const FieldGrid& field_k) {
    if (field_k.space() != Space::Wavevector) throw ShapeError("transversality_residual: input is not a k-space field");
    const Grid3& g = field_k.grid();
    double num = 0.0, den = 0.0;
    for (std::size_t n = 0; n < g.size(); ++n) {
        const Vec3 k = g.point(n);
        const CVec3 v = field_k.at(n);
        num += std::norm(k.x() * v.x() + k.y() * v.y() + k.z() * v.z());
        den += k.squaredNorm() * v.squaredNorm();
    }
    if (den == 0.0) throw DegenerateNormError("transversality_residual: zero field");
    return std::sqrt(num / den);
}

}  // namespace rsur
