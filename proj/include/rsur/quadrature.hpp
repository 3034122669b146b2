#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "rsur/types.hpp"

namespace rsur::quadrature {

struct Rule1D {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [lo, hi].
Rule1D gauss_legendre(std::size_t n, double lo, double hi);

/// `panels` equal sub-intervals of [lo, hi], n Gauss points each.
Rule1D composite_gauss_legendre(std::size_t n, std::size_t panels, double lo, double hi);

/// Rule on [0, inf) through r = scale * s / (1 - s), Gauss-Legendre panels in s.
Rule1D semi_infinite(std::size_t n, std::size_t panels, double scale);

/// Product rule in spherical coordinates: radial rule x Gauss-Legendre in
/// cos(theta) x trapezoid in phi. The polar nodes never touch the poles.
class SphericalRule {
public:
    SphericalRule(Rule1D radial, std::size_t polar_points, std::size_t azimuth_points);

    /// Default resolution for Gaussian-type integrands supported in |k| <= radius.
    static SphericalRule ball(double radius);

    /// Default resolution for fields with algebraic tails on all of R^3.
    static SphericalRule whole_space(double scale);

    template <class Fn>
    auto integrate(Fn&& fn) const {
        using Result = decltype(fn(Vec3{}));
        Result total{};
        const std::size_t nphi = azimuth_points_;
        const double wphi = 2.0 * std::numbers::pi / static_cast<double>(nphi);
        for (std::size_t ir = 0; ir < radial_.nodes.size(); ++ir) {
            const double r = radial_.nodes[ir];
            Result shell{};
            for (std::size_t iu = 0; iu < polar_.nodes.size(); ++iu) {
                const double u = polar_.nodes[iu];
                const double s = std::sqrt(1.0 - u * u);
                Result ring{};
                for (std::size_t ip = 0; ip < nphi; ++ip) {
                    const double phi = (static_cast<double>(ip) + 0.5) * wphi;
                    ring += fn(Vec3(r * s * std::cos(phi), r * s * std::sin(phi), r * u));
                }
                shell += ring * polar_.weights[iu];
            }
            total += shell * (radial_.weights[ir] * r * r * wphi);
        }
        return total;
    }

    [[nodiscard]] std::size_t node_count() const {
        return radial_.nodes.size() * polar_.nodes.size() * azimuth_points_;
    }

private:
    Rule1D radial_;
    Rule1D polar_;
    std::size_t azimuth_points_;
};

}  // namespace rsur::quadrature
