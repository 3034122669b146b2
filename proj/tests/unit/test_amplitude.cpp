#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "rsur/amplitude.hpp"
#include "rsur/errors.hpp"

using namespace rsur;

namespace {

// Finite-difference gradient and Laplacian of f at k.
AmplitudeJet numeric_jet(const Amplitude& f, const Vec3& k, double h) {
    AmplitudeJet j;
    j.value = f.value(k);
    for (int d = 0; d < 3; ++d) {
        auto line = [&](double s) {
            Vec3 q = k;
            q[d] = s;
            return f.value(q);
        };
        j.gradient[d] = oracle::derivative(line, k[d], h);
        j.laplacian += oracle::second_derivative(line, k[d], h);
    }
    return j;
}

void check_jet(const Amplitude& f, const Vec3& k) {
    const AmplitudeJet exact = f.jet(k);
    const AmplitudeJet fd = numeric_jet(f, k, 1e-3);
    const double scale = 1.0 + std::abs(exact.value) + std::abs(exact.laplacian);
    CHECK(std::abs(exact.value - fd.value) < 1e-14 * scale);
    for (int d = 0; d < 3; ++d) CHECK(std::abs(exact.gradient[d] - fd.gradient[d]) < 1e-7 * scale);
    CHECK(std::abs(exact.laplacian - fd.laplacian) < 1e-5 * scale);
}

}  // namespace

TEST_SUITE("amplitude") {

TEST_CASE("ground state amplitude values") {
    const auto f = ground_state_amplitude(2.0, 3.0);
    const Vec3 k(0.3, -0.4, 0.2);
    CHECK(std::abs(f->value(k) - 3.0 * 0.5 * std::exp(-2.0 * k.squaredNorm())) < 1e-15);
    CHECK(f->value(Vec3(0, 0, 1)) == cplx{});
    CHECK_THROWS_AS(f->jet(Vec3(0, 0, 1)), AxisSingularityError);
    CHECK_THROWS_AS(ground_state_amplitude(0.0), DomainError);
}

TEST_CASE("analytic jets agree with finite differences") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int i = 0; i < 40; ++i) {
        const auto f = oracle::random_amplitude(rng);
        const Vec3 k(u(rng), u(rng), u(rng));
        if (std::hypot(k.x(), k.y()) < 0.2) continue;
        check_jet(*f, k);
    }
}

TEST_CASE("dilated, scaled and evolved jets") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int i = 0; i < 20; ++i) {
        const auto base = oracle::random_amplitude(rng);
        const Vec3 k(u(rng), u(rng), u(rng));
        if (std::hypot(k.x(), k.y()) < 0.2) continue;
        const DilatedAmplitude dil(base, 1.7);
        CHECK(std::abs(dil.value(k) - base->value(1.7 * k)) < 1e-15);
        check_jet(dil, k);
        const ScaledAmplitude sc(base, cplx(0.3, -2.0));
        CHECK(std::abs(sc.value(k) - cplx(0.3, -2.0) * base->value(k)) < 1e-14);
        check_jet(sc, k);
        const EvolvedAmplitude ev(base, 0.8);
        CHECK(std::abs(ev.value(k) - base->value(k) * std::polar(1.0, -0.8 * k.norm())) < 1e-14);
        check_jet(ev, k);
    }
}

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(GaussianPolynomialAmplitude(AxialFactor::Perp, {}, GaussianEnvelope{Vec3::Zero(), Vec3(1, 0, 1)}),
                    DomainError);
    CHECK_THROWS_AS(GaussianPolynomialAmplitude(AxialFactor::Perp, {{-1, 0, 0, 1.0}}, GaussianEnvelope{}), DomainError);
    CHECK_THROWS_AS(DilatedAmplitude(nullptr, 1.0), DomainError);
    CHECK_THROWS_AS(DilatedAmplitude(ground_state_amplitude(1.0), -1.0), DomainError);
    CHECK_THROWS_AS(EvolvedAmplitude(ground_state_amplitude(1.0), NAN), DomainError);
    CHECK_THROWS_AS(EvolvedAmplitude(ground_state_amplitude(1.0), 1.0).jet(Vec3::Zero()), Error);
}

TEST_CASE("support radius bounds the amplitude") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        const auto f = oracle::random_amplitude(rng);
        const double r = f->support_radius();
        double peak = 0.0, edge = 0.0;
        for (int j = 0; j < 200; ++j) {
            const double th = 0.1 + 2.9 * j / 200.0, ph = 0.7 * j;
            const Vec3 dir(std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th));
            for (double s : {0.2, 0.5, 1.0, 1.5}) peak = std::max(peak, std::abs(f->value(s * dir)));
            edge = std::max(edge, std::abs(f->value(r * dir)));
        }
        CHECK(edge < 1e-14 * peak);
    }
}

}
