#include "rsur/quadrature.hpp"

#include <boost/math/special_functions/legendre.hpp>

#include "rsur/errors.hpp"

namespace rsur::quadrature {

Rule1D gauss_legendre(std::size_t n, double lo, double hi) {
    if (n == 0) throw DomainError("gauss_legendre: need at least one node");
    const auto order = static_cast<int>(n);
    const auto zeros = boost::math::legendre_p_zeros<double>(order);  // non-negative half
    std::vector<double> x, w;
    for (double z : zeros) {
        const double dp = boost::math::legendre_p_prime(order, z);
        const double weight = 2.0 / ((1.0 - z * z) * dp * dp);
        x.push_back(z);
        w.push_back(weight);
        if (z != 0.0) {
            x.push_back(-z);
            w.push_back(weight);
        }
    }
    Rule1D rule;
    const double half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
    for (std::size_t i = 0; i < x.size(); ++i) {
        rule.nodes.push_back(mid + half * x[i]);
        rule.weights.push_back(half * w[i]);
    }
    return rule;
}

Rule1D composite_gauss_legendre(std::size_t n, std::size_t panels, double lo, double hi) {
    Rule1D rule;
    const double width = (hi - lo) / static_cast<double>(panels);
    for (std::size_t p = 0; p < panels; ++p) {
        const double a = lo + static_cast<double>(p) * width;
        const Rule1D piece = gauss_legendre(n, a, a + width);
        rule.nodes.insert(rule.nodes.end(), piece.nodes.begin(), piece.nodes.end());
        rule.weights.insert(rule.weights.end(), piece.weights.begin(), piece.weights.end());
    }
    return rule;
}

Rule1D semi_infinite(std::size_t n, std::size_t panels, double scale) {
    const Rule1D base = composite_gauss_legendre(n, panels, 0.0, 1.0);
    Rule1D rule;
    for (std::size_t i = 0; i < base.nodes.size(); ++i) {
        const double s = base.nodes[i];
        const double one_minus = 1.0 - s;
        rule.nodes.push_back(scale * s / one_minus);
        rule.weights.push_back(base.weights[i] * scale / (one_minus * one_minus));
    }
    return rule;
}

SphericalRule::SphericalRule(Rule1D radial, std::size_t polar_points, std::size_t azimuth_points)
    : radial_(std::move(radial)), polar_(gauss_legendre(polar_points, -1.0, 1.0)), azimuth_points_(azimuth_points) {
    if (azimuth_points_ == 0) throw DomainError("SphericalRule: need azimuthal points");
}

SphericalRule SphericalRule::ball(double radius) {
    return SphericalRule(composite_gauss_legendre(20, 4, 0.0, radius), 40, 64);
}

SphericalRule SphericalRule::whole_space(double scale) {
    return SphericalRule(semi_infinite(20, 8, scale), 40, 40);
}

}  // namespace rsur::quadrature
