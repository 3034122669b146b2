#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rsur/quadrature.hpp"

using namespace rsur;
using namespace rsur::quadrature;

TEST_SUITE("quadrature") {

TEST_CASE("gauss-legendre is exact for polynomials of degree 2n-1") {
    const Rule1D rule = gauss_legendre(6, -1.0, 3.0);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * std::pow(rule.nodes[i], 11);
    CHECK(sum == doctest::Approx((std::pow(3.0, 12) - 1.0) / 12.0).epsilon(1e-13));
}

TEST_CASE("composite rule covers the interval") {
    const Rule1D rule = composite_gauss_legendre(5, 7, 0.0, 2.0);
    CHECK(rule.nodes.size() == 35);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * std::exp(rule.nodes[i]);
    CHECK(sum == doctest::Approx(std::exp(2.0) - 1.0).epsilon(1e-14));
}

TEST_CASE("semi-infinite rule handles algebraic tails") {
    const Rule1D rule = semi_infinite(20, 8, 1.0);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] / std::pow(1.0 + rule.nodes[i], 4);
    CHECK(sum == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("spherical rule integrates k_perp^2 exp(-k^2) to pi^(3/2)") {
    const auto rule = SphericalRule::ball(8.0);
    const double v = rule.integrate([](const Vec3& k) { return (k.x() * k.x() + k.y() * k.y()) * std::exp(-k.squaredNorm()); });
    CHECK(v == doctest::Approx(std::pow(std::numbers::pi, 1.5)).epsilon(1e-13));
}

TEST_CASE("whole-space rule integrates an r^-8 tail") {
    const auto rule = SphericalRule::whole_space(1.0);
    // 4 pi int r^2 / (1 + r^2)^4 dr = 4 pi * pi / 32
    const double v = rule.integrate([](const Vec3& r) { return 1.0 / std::pow(1.0 + r.squaredNorm(), 4); });
    CHECK(v == doctest::Approx(std::numbers::pi * std::numbers::pi / 8.0).epsilon(1e-12));
}

}
