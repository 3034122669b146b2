#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "rsur/analytic_fields.hpp"
#include "rsur/errors.hpp"
#include "rsur/kspace.hpp"

using namespace rsur;

namespace {

const cplx I{0.0, 1.0};

FieldGrid random_field(const Grid3& g, Space space, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> n;
    std::vector<cplx> v(3 * g.size());
    for (auto& x : v) x = {n(rng), n(rng)};
    return FieldGrid(g, space, std::move(v));
}

}  // namespace

TEST_SUITE("kspace") {

TEST_CASE("wavevector magnitudes") {
    const WaveVector k{3.0, 4.0, 12.0};
    CHECK(k.magnitude() == 13.0);
    CHECK(k.perp() == 5.0);
}

TEST_CASE("polarization hand values") {
    const double s = 1.0 / std::sqrt(2.0);
    const CVec3 ex = polarization(WaveVector{1, 0, 0});
    CHECK(std::abs(ex.x()) < 1e-16);
    CHECK(std::abs(ex.y() - (-I * s)) < 1e-15);
    CHECK(std::abs(ex.z() - s) < 1e-15);
    const CVec3 ey = polarization(WaveVector{0, 1, 0});
    CHECK(std::abs(ey.x() - I * s) < 1e-15);
    CHECK(std::abs(ey.y()) < 1e-16);
    CHECK(std::abs(ey.z() - s) < 1e-15);
    const CVec3 emx = polarization(WaveVector{-1, 0, 0});
    CHECK((emx - ex.conjugate()).norm() < 1e-15);
}

TEST_CASE("polarization invariants at random wavevectors") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 1000; ++i) {
        const Vec3 kv(u(rng), u(rng), u(rng));
        const WaveVector k(kv);
        const double kk = kv.norm();
        const CVec3 e = polarization(k);
        const CVec3 kc = kv.cast<cplx>();
        CHECK(std::fabs(e.squaredNorm() - 1.0) <= 1e-14);
        CHECK(std::abs(kc.dot(e)) <= 1e-14 * kk);
        CHECK((I * cross(kc, e) - kk * e).norm() <= 1e-13 * kk);
        CHECK((polarization(-k) - e.conjugate()).norm() <= 1e-14);
    }
}

TEST_CASE("polarization is undefined on the kz-axis") {
    CHECK_THROWS_AS(polarization(WaveVector{0, 0, 1}), AxisSingularityError);
    CHECK_THROWS_AS(polarization(WaveVector{1e-14, 0, 1}), AxisSingularityError);
    CHECK_THROWS_AS(polarization(WaveVector{0, 0, 0}), AxisSingularityError);
    CHECK_NOTHROW(polarization(WaveVector{1e-10, 0, 1}));
}

TEST_CASE("grids are half-offset Fourier pairs") {
    const Grid3 r = Grid3::centered(32, 16.0);
    const Grid3 k = r.reciprocal();
    CHECK(r.is_fourier_pair(k));
    CHECK(k.is_fourier_pair(r));
    for (int d = 0; d < 3; ++d) {
        CHECK(k.axis(d).spacing == doctest::Approx(2 * std::numbers::pi / (32 * r.axis(d).spacing)));
        CHECK(k.axis(d).coord(15) == doctest::Approx(-k.axis(d).coord(16)));
        CHECK(k.axis(d).coord(16) > 0.0);
    }
    CHECK(k.reciprocal() == r);
    CHECK_FALSE(r.is_fourier_pair(Grid3::centered(32, 8.0).reciprocal()));
    CHECK_THROWS_AS(Grid3::centered(1, 1.0), ShapeError);
    CHECK_THROWS_AS(Grid3({Axis{4, 0.0, 0.0}, Axis{4, 1.0, 0.0}, Axis{4, 1.0, 0.0}}), ShapeError);
}

TEST_CASE("field grid size must match") {
    const Grid3 g = Grid3::centered(4, 1.0);
    CHECK_THROWS_AS(FieldGrid(g, Space::Position, std::vector<cplx>(10)), ShapeError);
}

TEST_CASE("synthesis node values") {
    std::mt19937_64 rng(22);
    const auto amps = oracle::random_pair(rng);
    HelicityAmplitudePair both{amps.plus ? amps.plus : ground_state_amplitude(1.0),
                               amps.minus ? amps.minus : ground_state_amplitude(0.7, cplx(0.2, 1.0))};
    const Grid3 kg = Grid3::centered(16, 8.0).reciprocal();
    const double t = 0.37;
    const FieldGrid f = synthesize_kspace(both, kg, t);
    std::uniform_int_distribution<std::size_t> pick(0, kg.size() - 1);
    for (int i = 0; i < 5; ++i) {
        const std::size_t n = pick(rng);
        const Vec3 k = kg.point(n);
        const double kk = k.norm(), kp2 = k.x() * k.x() + k.y() * k.y();
        const double s = 1.0 / std::sqrt(2.0 * kk * kk * kp2);
        // hand-written e(k) and its conjugate
        const cplx e[3] = {cplx(-k.x() * k.z(), k.y() * kk) * s, cplx(-k.y() * k.z(), -k.x() * kk) * s, kp2 * s};
        const cplx fp = both.plus->value(k) * std::exp(-I * kk * t);
        const cplx fm = std::conj(both.minus->value(-k)) * std::exp(I * kk * t);
        for (int c = 0; c < 3; ++c) CHECK(std::abs(f.at(n)[c] - (e[c] * fp + std::conj(e[c]) * fm)) < 1e-14);
    }
    const FieldGrid only = synthesize_kspace(HelicityAmplitudePair{both.plus, nullptr}, kg, 0.0);
    for (std::size_t n = 0; n < kg.size(); n += 97) {
        const Vec3 k = kg.point(n);
        CHECK((only.at(n) - polarization(WaveVector(k)) * both.plus->value(k)).norm() < 1e-15);
    }
    CHECK_THROWS_AS(synthesize_kspace(both, kg, NAN), DomainError);
}

TEST_CASE("simplest-field amplitudes synthesize the Gaussian transform") {
    const cplx c(0.8, -0.3);
    const double a = 1.3;
    const auto amps = analytic::saturating_amplitudes(analytic::simplest_spec(c, a));
    const Grid3 kg = Grid3::centered(16, 20.0).reciprocal();
    const FieldGrid f = synthesize_kspace(amps, kg, 0.0);
    for (std::size_t n = 0; n < kg.size(); ++n) {
        const Vec3 k = kg.point(n);
        const CVec3 want = -I * c * std::pow(a, 5) * std::exp(-0.5 * a * a * k.squaredNorm()) *
                           CVec3(k.y(), -k.x(), 0.0);
        CHECK((f.at(n) - want).norm() <= 1e-13 * (1.0 + want.norm()));
    }
}

TEST_CASE("fourier round trip and discrete plancherel") {
    const Grid3 r = Grid3({Axis{8, 0.5, -2.0}, Axis{16, 0.25, -1.9}, Axis{4, 1.0, -2.0}});
    const FieldGrid f = random_field(r, Space::Position, 7);
    const FieldGrid k = fourier_to_kspace(f);
    CHECK(k.space() == Space::Wavevector);
    CHECK(k.grid() == r.reciprocal());
    CHECK(k.energy() == doctest::Approx(f.energy()).epsilon(1e-12));
    const FieldGrid back = fourier_to_position(k, r);
    CHECK(relative_l2(back, f) < 1e-12);
    const FieldGrid g = random_field(r.reciprocal(), Space::Wavevector, 8);
    CHECK(relative_l2(fourier_to_kspace(fourier_to_position(g), g.grid()), g) < 1e-12);
}

TEST_CASE("fourier transform matches a direct sum") {
    const Grid3 r = Grid3({Axis{4, 0.7, -1.2}, Axis{6, 0.5, -1.25}, Axis{4, 0.9, -1.3}});
    const Grid3 kg = r.reciprocal();
    const FieldGrid f = random_field(r, Space::Position, 9);
    const FieldGrid k = fourier_to_kspace(f);
    const double c = std::pow(2 * std::numbers::pi, -1.5) * r.cell_volume();
    for (std::size_t j = 0; j < kg.size(); j += 5) {
        CVec3 sum = CVec3::Zero();
        for (std::size_t m = 0; m < r.size(); ++m) sum += f.at(m) * std::exp(-I * kg.point(j).dot(r.point(m)));
        CHECK((k.at(j) - c * sum).norm() < 1e-12 * (1.0 + sum.norm()));
    }
}

TEST_CASE("mismatched transforms are rejected") {
    const Grid3 r = Grid3::centered(8, 4.0);
    const FieldGrid f = random_field(r, Space::Position, 1);
    CHECK_THROWS_AS(fourier_to_position(f), ShapeError);
    CHECK_THROWS_AS(fourier_to_kspace(f, Grid3::centered(8, 4.0)), ShapeError);
    CHECK_THROWS_AS(shifted_dft(std::vector<cplx>(5), r, r.reciprocal(), 3, -1), ShapeError);
}

TEST_CASE("FFT of the simplest field reproduces its transform") {
    const cplx c(1.0, 0.5);
    const double a = 1.0;
    const Grid3 rg = Grid3::centered(64, 16.0);
    const FieldGrid fr = FieldGrid::sample(rg, Space::Position, [&](const Vec3& r) { return analytic::simplest_field(r, c, a); });
    const FieldGrid fk = fourier_to_kspace(fr);
    const FieldGrid want = FieldGrid::sample(fk.grid(), Space::Wavevector,
                                             [&](const Vec3& k) { return analytic::simplest_field_kspace(k, c, a); });
    CHECK(relative_l2(fk, want) < 1e-6);
    CHECK(fr.energy() == doctest::Approx(fk.energy()).epsilon(1e-10));
}

TEST_CASE("amplitude norms") {
    const auto f = ground_state_amplitude(1.0);
    const double n = norm(HelicityAmplitudePair{f, nullptr});
    CHECK(n == doctest::Approx(std::pow(std::numbers::pi, 1.5)).epsilon(1e-12));
    const double oracle_n = oracle::spherical_integral(
        [&](const Vec3& k) { return std::norm(f->value(k)); }, 12.0);
    CHECK(n == doctest::Approx(oracle_n).epsilon(1e-9));
    const auto f2 = ground_state_amplitude(1.0, 2.0);
    CHECK(norm(HelicityAmplitudePair{f2, nullptr}) == doctest::Approx(4 * n).epsilon(1e-13));
    CHECK(norm(HelicityAmplitudePair{f, f}) == doctest::Approx(2 * n).epsilon(1e-13));
    CHECK_THROWS_AS(norm(HelicityAmplitudePair{}), DegenerateNormError);
    CHECK_THROWS_AS(norm(HelicityAmplitudePair{ground_state_amplitude(1.0, 0.0), nullptr}), DegenerateNormError);
}

TEST_CASE("grid norm equals amplitude norm") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 5; ++i) {
        const auto amps = oracle::random_pair(rng);
        const Grid3 kg = Grid3::centered(48, 20.0).reciprocal();
        const FieldGrid fk = synthesize_kspace(amps, kg, 0.0);
        const FieldGrid fr = fourier_to_position(fk);
        CHECK(norm(fk) == doctest::Approx(norm(amps)).epsilon(1e-6));
        CHECK(norm(fr) == doctest::Approx(norm(fk)).epsilon(1e-12));
    }
    const Grid3 g = Grid3::centered(4, 1.0);
    CHECK_THROWS_AS(norm(FieldGrid(g, Space::Position, std::vector<cplx>(3 * g.size()))), DegenerateNormError);
}

TEST_CASE("positive-helicity fields satisfy i dF/dt = curl F") {
    std::mt19937_64 rng(24);
    const HelicityAmplitudePair amps{oracle::random_amplitude(rng), nullptr};
    const Grid3 kg = Grid3::centered(24, 12.0).reciprocal();
    const double t = 0.3, dt = 1e-4;
    const FieldGrid f = synthesize_kspace(amps, kg, t);
    const FieldGrid fp = synthesize_kspace(amps, kg, t + dt);
    const FieldGrid fm = synthesize_kspace(amps, kg, t - dt);
    const FieldGrid curl = spectral_curl(f);
    // exact time derivative of exp(-ikt) is -ik: i dF/dt = k F
    double num = 0.0, den = 0.0, fd_num = 0.0;
    for (std::size_t n = 0; n < kg.size(); ++n) {
        const double kk = kg.point(n).norm();
        const CVec3 lhs = kk * f.at(n);
        const CVec3 fd = I * (fp.at(n) - fm.at(n)) / (2 * dt);
        num += (lhs - curl.at(n)).squaredNorm();
        fd_num += (fd - curl.at(n)).squaredNorm();
        den += curl.at(n).squaredNorm();
    }
    CHECK(std::sqrt(num / den) < 1e-12);
    CHECK(std::sqrt(fd_num / den) < 1e-6);
    CHECK(transversality_residual(f) < 1e-14);
}

TEST_CASE("transversality residual detects longitudinal fields") {
    const Grid3 kg = Grid3::centered(8, 4.0).reciprocal();
    const FieldGrid lon = FieldGrid::sample(kg, Space::Wavevector, [](const Vec3& k) { return k.cast<cplx>(); });
    CHECK(transversality_residual(lon) == doctest::Approx(1.0));
    CHECK_THROWS_AS(spectral_curl(fourier_to_position(lon)), ShapeError);
}

}
