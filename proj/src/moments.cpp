#include "rsur/moments.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "rsur/errors.hpp"
#include "rsur/kspace.hpp"
#include "rsur/quadrature.hpp"

namespace rsur {
namespace {

constexpr cplx kI{0.0, 1.0};

void require_norm(double n, const char* what) {
    if (!(n > 0.0) || !std::isfinite(n)) throw DegenerateNormError(std::string(what) + ": zero norm");
}

// Sum of w(point) * F*.F over the grid, accumulated per z-slab.
template <class Weight>
double weighted_energy(const FieldGrid& field, Weight&& weight) {
    const Grid3& g = field.grid();
    const auto values = field.values();
    const std::size_t nx = g.axis(0).count, ny = g.axis(1).count, nz = g.axis(2).count;
    double total = 0.0;
    std::size_t flat = 0;
    for (std::size_t k = 0; k < nz; ++k) {
        double slab = 0.0;
        for (std::size_t j = 0; j < ny; ++j) {
            for (std::size_t i = 0; i < nx; ++i, ++flat) {
                const double d = std::norm(values[3 * flat]) + std::norm(values[3 * flat + 1]) +
                                 std::norm(values[3 * flat + 2]);
                slab += weight(g.point(i, j, k)) * d;
            }
        }
        total += slab;
    }
    return total * g.cell_volume();
}

double second_moment(const FieldGrid& field) {
    const double n = field.energy();
    require_norm(n, "second moment");
    return weighted_energy(field, [](const Vec3& p) { return p.squaredNorm(); }) / n;
}

struct Integrand {
    double perp = 0.0;
    cplx azimuthal{};
    cplx laplacian{};

    Integrand& operator+=(const Integrand& o) {
        perp += o.perp;
        azimuthal += o.azimuthal;
        laplacian += o.laplacian;
        return *this;
    }
    Integrand operator*(double w) const { return {perp * w, azimuthal * w, laplacian * w}; }
};

// Integrand of N Delta r^2 for one amplitude jet.
Integrand position_integrand(const Vec3& k, const AmplitudeJet& j) {
    const double kp2 = k.x() * k.x() + k.y() * k.y();
    const double kk = k.norm();
    const cplx fc = std::conj(j.value);
    const cplx rotation = k.x() * j.gradient[1] - k.y() * j.gradient[0];
    return {std::norm(j.value) / kp2, 2.0 * kI * k.z() / (kk * kp2) * fc * rotation, -fc * j.laplacian};
}

cplx sum(const Integrand& i) {
    return i.perp + i.azimuthal + i.laplacian;
}

AmplitudeJet conjugate(AmplitudeJet j) {
    j.value = std::conj(j.value);
    for (auto& g : j.gradient) g = std::conj(g);
    j.laplacian = std::conj(j.laplacian);
    return j;
}

void require_amplitudes(const HelicityAmplitudePair& amps) {
    if (!amps.plus && !amps.minus) throw DegenerateNormError("both helicity amplitudes are zero");
}

// Every amplitude-path integral, accumulated in one sweep of the rule.
struct AmplitudeSums {
    double norm = 0.0;
    double k2 = 0.0;
    double field_norm = 0.0;  // int |F~|^2 of the synthesized vector field
    Integrand position;

    AmplitudeSums& operator+=(const AmplitudeSums& o) {
        norm += o.norm;
        k2 += o.k2;
        field_norm += o.field_norm;
        position += o.position;
        return *this;
    }
    AmplitudeSums operator*(double w) const { return {norm * w, k2 * w, field_norm * w, position * w}; }
};

AmplitudeSums amplitude_sums(const HelicityAmplitudePair& amps, const quadrature::SphericalRule& rule, bool jets,
                             bool field) {
    return rule.integrate([&](const Vec3& k) {
        AmplitudeSums s;
        cplx fp{}, fm{};
        if (amps.plus) {
            if (jets) {
                const AmplitudeJet j = amps.plus->jet(k);
                fp = j.value;
                s.position += position_integrand(k, j);
            } else {
                fp = amps.plus->value(k);
            }
        }
        if (amps.minus) {
            if (jets) {
                const AmplitudeJet j = conjugate(amps.minus->jet(k));
                fm = std::conj(j.value);
                s.position += position_integrand(k, j);
            } else {
                fm = amps.minus->value(k);
            }
        }
        s.norm = std::norm(fp) + std::norm(fm);
        s.k2 = k.squaredNorm() * s.norm;
        if (field) {
            const CVec3 e = polarization(WaveVector(k));
            CVec3 f = CVec3::Zero();
            if (amps.plus) f += e * fp;
            if (amps.minus) f += e.conjugate() * std::conj(amps.minus->value(-k));
            s.field_norm = f.squaredNorm();
        }
        return s;
    });
}

// |f|^2 / k_perp^2 is integrable only if f vanishes on the kz-axis.
void require_axis_zero(const HelicityAmplitudePair& amps, double radius, double norm) {
    const double peak = std::sqrt(norm) / std::pow(radius, 1.5);
    for (int i = 0; i <= 32; ++i) {
        const Vec3 k(1e-9 * radius, 0.0, radius * (-1.0 + i / 16.0));
        double v = 0.0;
        if (amps.plus) v = std::max(v, std::abs(amps.plus->value(k)));
        if (amps.minus) v = std::max(v, std::abs(amps.minus->value(k)));
        if (v > 1e-6 * peak) throw AxisSingularityError("amplitude does not vanish on the kz-axis");
    }
}

PositionVarianceTerms terms_from(const AmplitudeSums& s) {
    PositionVarianceTerms out;
    out.norm = s.norm;
    out.perp = s.position.perp;
    out.azimuthal = s.position.azimuthal.real();
    out.laplacian = s.position.laplacian.real();
    return out;
}

}  // namespace

void to_json(nlohmann::json& j, const VarianceReport& r) {
    j = nlohmann::json{{"delta_r2", r.delta_r2},         {"delta_k2", r.delta_k2},
                       {"product", r.product},           {"bound", r.bound},
                       {"saturation_ratio", r.saturation_ratio}, {"norm_r", r.norm_r},
                       {"norm_k", r.norm_k},             {"truncation_warning", r.truncation_warning}};
}

void from_json(const nlohmann::json& j, VarianceReport& r) {
    j.at("delta_r2").get_to(r.delta_r2);
    j.at("delta_k2").get_to(r.delta_k2);
    j.at("product").get_to(r.product);
    j.at("bound").get_to(r.bound);
    j.at("saturation_ratio").get_to(r.saturation_ratio);
    j.at("norm_r").get_to(r.norm_r);
    j.at("norm_k").get_to(r.norm_k);
    r.truncation_warning = j.value("truncation_warning", false);
}

double variance_position(const FieldGrid& field_r) {
    if (field_r.space() != Space::Position) throw ShapeError("variance_position: field is not in position space");
    return second_moment(field_r);
}

double variance_kspace(const FieldGrid& field_k) {
    if (field_k.space() != Space::Wavevector) throw ShapeError("variance_kspace: field is not in k-space");
    return second_moment(field_k);
}

double position_norm(const PositionField& field, double scale) {
    const auto rule = quadrature::SphericalRule::whole_space(scale);
    const double n = rule.integrate([&](const Vec3& r) { return field(r).squaredNorm(); });
    require_norm(n, "position_norm");
    return n;
}

double variance_position(const PositionField& field, double scale) {
    const auto rule = quadrature::SphericalRule::whole_space(scale);
    // real part: norm, imaginary part: r^2-weighted norm
    const cplx m = rule.integrate([&](const Vec3& r) {
        const double d = field(r).squaredNorm();
        return cplx(d, r.squaredNorm() * d);
    });
    require_norm(m.real(), "variance_position");
    return m.imag() / m.real();
}

PositionVarianceTerms position_variance_terms(const HelicityAmplitudePair& amps) {
    require_amplitudes(amps);
    const double radius = amps.support_radius();
    const auto rule = quadrature::SphericalRule::ball(radius);
    const double n = amplitude_sums(amps, rule, false, false).norm;
    require_norm(n, "position_variance_terms");
    require_axis_zero(amps, radius, n);
    return terms_from(amplitude_sums(amps, rule, true, false));
}

double variance_position_from_amplitudes(const HelicityAmplitudePair& amps) {
    return position_variance_terms(amps).total();
}

double variance_kspace_from_amplitudes(const HelicityAmplitudePair& amps) {
    require_amplitudes(amps);
    const AmplitudeSums sums = amplitude_sums(amps, quadrature::SphericalRule::ball(amps.support_radius()), false, false);
    require_norm(sums.norm, "variance_kspace_from_amplitudes");
    return sums.k2 / sums.norm;
}

SampledAmplitudes sample_amplitudes(const HelicityAmplitudePair& amps, const Grid3& kgrid) {
    SampledAmplitudes out{kgrid, std::vector<cplx>(kgrid.size()), std::vector<cplx>(kgrid.size())};
    for (std::size_t n = 0; n < kgrid.size(); ++n) {
        const Vec3 k = kgrid.point(n);
        if (amps.plus) out.plus[n] = amps.plus->value(k);
        if (amps.minus) out.minus[n] = amps.minus->value(k);
    }
    return out;
}

double variance_position_from_amplitudes(const SampledAmplitudes& amps) {
    const Grid3& kg = amps.kgrid;
    if (amps.plus.size() != kg.size() || amps.minus.size() != kg.size()) {
        throw ShapeError("sampled amplitudes do not match their grid");
    }
    const Grid3 rg = kg.reciprocal();
    const double dv = kg.cell_volume();

    double n = 0.0;
    cplx total{};
    for (int helicity = 0; helicity < 2; ++helicity) {
        std::vector<cplx> f = helicity == 0 ? amps.plus : amps.minus;
        if (helicity == 1) {
            for (auto& v : f) v = std::conj(v);
        }
        double part = 0.0;
        for (const auto& v : f) part += std::norm(v);
        if (part == 0.0) continue;
        n += part * dv;

        // f(r) on the partner grid, then d/dk_d <-> -i x_d and Laplacian <-> -r^2
        const std::vector<cplx> fr = shifted_dft(f, kg, rg, 1, +1);
        std::array<std::vector<cplx>, 3> grad;
        std::vector<cplx> lap_r(fr.size());
        for (std::size_t d = 0; d < 3; ++d) {
            std::vector<cplx> tmp(fr.size());
            for (std::size_t i = 0; i < fr.size(); ++i) tmp[i] = -kI * rg.point(i)[static_cast<long>(d)] * fr[i];
            grad[d] = shifted_dft(tmp, rg, kg, 1, -1);
        }
        for (std::size_t i = 0; i < fr.size(); ++i) lap_r[i] = -rg.point(i).squaredNorm() * fr[i];
        const std::vector<cplx> lap = shifted_dft(lap_r, rg, kg, 1, -1);

        for (std::size_t i = 0; i < f.size(); ++i) {
            const Vec3 k = kg.point(i);
            AmplitudeJet j;
            j.value = f[i];
            j.gradient = {grad[0][i], grad[1][i], grad[2][i]};
            j.laplacian = lap[i];
            total += sum(position_integrand(k, j)) * dv;
        }
    }
    require_norm(n, "variance_position_from_amplitudes");
    return total.real() / n;
}

VarianceReport uncertainty_product(const HelicityAmplitudePair& amps, const PositionField& position_field,
                                   double position_scale) {
    require_amplitudes(amps);
    const double radius = amps.support_radius();
    const auto rule = quadrature::SphericalRule::ball(radius);
    // cheap value-only probe first, so degenerate or on-axis input fails before the jet sweep
    const double probe = amplitude_sums(amps, quadrature::SphericalRule(quadrature::gauss_legendre(20, 0.0, radius), 8, 8),
                                        false, false)
                             .norm;
    require_norm(probe, "uncertainty_product");
    require_axis_zero(amps, radius, probe);

    const AmplitudeSums sums = amplitude_sums(amps, rule, true, !position_field);
    require_norm(sums.norm, "uncertainty_product");
    VarianceReport r;
    r.norm_k = sums.norm;
    r.norm_r = position_field ? position_norm(position_field, position_scale) : sums.field_norm;
    r.delta_r2 = terms_from(sums).total();
    r.delta_k2 = sums.k2 / sums.norm;
    r.product = std::sqrt(r.delta_r2 * r.delta_k2);
    r.saturation_ratio = r.product / r.bound;
    return r;
}

VarianceReport uncertainty_product(const FieldGrid& field_r, const FieldGrid& field_k) {
    if (field_r.space() != Space::Position || field_k.space() != Space::Wavevector) {
        throw ShapeError("uncertainty_product: expected a (position, wavevector) pair");
    }
    if (!field_r.grid().is_fourier_pair(field_k.grid())) throw ShapeError("uncertainty_product: grids are not a Fourier pair");
    VarianceReport r;
    r.norm_r = norm(field_r);
    r.norm_k = norm(field_k);
    r.delta_r2 = variance_position(field_r);
    r.delta_k2 = variance_kspace(field_k);
    r.product = std::sqrt(r.delta_r2 * r.delta_k2);
    r.saturation_ratio = r.product / r.bound;
    r.truncation_warning = boundary_density_ratio(field_r) > kTruncationThreshold ||
                           boundary_density_ratio(field_k) > kTruncationThreshold;
    return r;
}

VarianceReport uncertainty_product(const FieldGrid& field) {
    if (field.space() == Space::Position) return uncertainty_product(field, fourier_to_kspace(field));
    return uncertainty_product(fourier_to_position(field), field);
}

double massless_bound(double helicity) {
    if (!(helicity >= 0.0) || !std::isfinite(helicity)) throw DomainError("massless_bound: helicity must be >= 0");
    return 1.0 + std::sqrt(0.25 + 2.0 * helicity);
}

double boundary_density_ratio(const FieldGrid& field) {
    const Grid3& g = field.grid();
    const std::size_t nx = g.axis(0).count, ny = g.axis(1).count, nz = g.axis(2).count;
    double peak = 0.0, edge = 0.0;
    std::size_t flat = 0;
    for (std::size_t k = 0; k < nz; ++k) {
        for (std::size_t j = 0; j < ny; ++j) {
            for (std::size_t i = 0; i < nx; ++i, ++flat) {
                const double d = field.at(flat).squaredNorm();
                peak = std::max(peak, d);
                if (i == 0 || j == 0 || k == 0 || i == nx - 1 || j == ny - 1 || k == nz - 1) edge = std::max(edge, d);
            }
        }
    }
    if (peak == 0.0) throw DegenerateNormError("boundary_density_ratio: zero field");
    return edge / peak;
}

}  // namespace rsur
