#pragma once

// Independent reference implementations used only by the tests.

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "rsur/amplitude.hpp"
#include "rsur/types.hpp"

namespace oracle {

using big = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<120>>;
using rational = boost::multiprecision::cpp_rational;

// D(w) = sum_n (-1)^n 2^n w^(2n+1) / (2n+1)!!, summed in 120-digit arithmetic.
// The alternating terms reach exp(w^2) in size, so |w| <= 12 keeps > 50 digits.
inline double dawson(double w) {
    const big x(w);
    const big x2 = x * x;
    big term = x;  // (-1)^n 2^n x^(2n+1) / (2n+1)!!
    big sum = term;
    for (int n = 1; n < 2000; ++n) {
        term *= -2 * x2 / (2 * n + 1);
        sum += term;
        if (n > 2 * w * w && abs(term) < big("1e-40")) break;
    }
    return static_cast<double>(sum);
}

// Same series, kept in extended precision.
inline big dawson_big(const big& x) {
    const big x2 = x * x;
    big term = x;
    big sum = term;
    for (int n = 1; n < 4000; ++n) {
        term *= -2 * x2 / (2 * n + 1);
        sum += term;
        if (n > 2 * x2 && abs(term) < big("1e-100")) break;
    }
    return sum;
}

// Radial derivative data of the scalar generator
//   G(r,t) = (1/2ar) [D(l+) + D(l-) + i sqrt(pi)/2 (exp(-l+^2) - exp(-l-^2))],  l+- = (r +- t)/(sqrt(2) a),
// from the closed form in 120-digit arithmetic with central differences.
struct GeneratorData {
    std::complex<double> value, first, second, mixed;
};

inline GeneratorData generator_closed_form(double r_in, double t_in, double a_in) {
    using std::complex;
    const big a(a_in), r(r_in), t(t_in);
    const big s2a = sqrt(big(2)) * a;
    const big half_sqrt_pi = sqrt(boost::math::constants::pi<big>()) / 2;
    auto g = [&](const big& rr, const big& tt) {
        const big lp = (rr + tt) / s2a, lm = (rr - tt) / s2a;
        const big re = (dawson_big(lp) + dawson_big(lm)) / (2 * a * rr);
        const big im = half_sqrt_pi * (exp(-lp * lp) - exp(-lm * lm)) / (2 * a * rr);
        return std::pair<big, big>{re, im};
    };
    const big h("1e-30");
    const auto g0 = g(r, t), gp = g(r + h, t), gm = g(r - h, t);
    const auto gpp = g(r + h, t + h), gpm = g(r + h, t - h), gmp = g(r - h, t + h), gmm = g(r - h, t - h);
    auto pack = [](const big& re, const big& im) { return complex<double>(static_cast<double>(re), static_cast<double>(im)); };
    const big gr_re = (gp.first - gm.first) / (2 * h), gr_im = (gp.second - gm.second) / (2 * h);
    const big grr_re = (gp.first - 2 * g0.first + gm.first) / (h * h);
    const big grr_im = (gp.second - 2 * g0.second + gm.second) / (h * h);
    const big grt_re = (gpp.first - gpm.first - gmp.first + gmm.first) / (4 * h * h);
    const big grt_im = (gpp.second - gpm.second - gmp.second + gmm.second) / (4 * h * h);
    GeneratorData d;
    d.value = pack(g0.first, g0.second);
    d.first = pack(gr_re / r, gr_im / r);
    d.second = pack((grr_re - gr_re / r) / (r * r), (grr_im - gr_im / r) / (r * r));
    d.mixed = pack(grt_re / r, grt_im / r);
    return d;
}

// erfi(w) = 2/sqrt(pi) sum_n w^(2n+1) / (n! (2n+1)).
inline double erfi(double w) {
    const big x(w);
    const big x2 = x * x;
    big power = x;
    big sum = x;
    for (int n = 1; n < 4000; ++n) {
        power *= x2 / n;
        const big term = power / (2 * n + 1);
        sum += term;
        if (n > w * w && abs(term) < abs(sum) * big("1e-40")) break;
    }
    return static_cast<double>(2 * sum / sqrt(boost::math::constants::pi<big>()));
}

// L_n^alpha(x) = sum_k binom(n + alpha, n - k) (-x)^k / k!, exact in rationals.
inline double laguerre(unsigned n, const rational& alpha, const rational& x) {
    rational total = 0;
    for (unsigned k = 0; k <= n; ++k) {
        const unsigned m = n - k;
        rational binom = 1;
        for (unsigned j = 0; j < m; ++j) binom *= (rational(n) + alpha - j) / rational(j + 1);
        rational power = 1;
        for (unsigned j = 0; j < k; ++j) power *= -x / rational(j + 1);
        total += binom * power;
    }
    return static_cast<double>(total);
}

// Adaptive Gauss-Kronrod over r in [0, rmax], cos(theta) in [-1, 1], phi in [0, 2 pi).
inline double spherical_integral(const std::function<double(const rsur::Vec3&)>& f, double rmax) {
    using boost::math::quadrature::gauss_kronrod;
    const double two_pi = 2.0 * boost::math::constants::pi<double>();
    auto shell = [&](double r) {
        auto polar = [&](double u) {
            const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
            auto azim = [&](double phi) { return f(rsur::Vec3(r * s * std::cos(phi), r * s * std::sin(phi), r * u)); };
            return gauss_kronrod<double, 31>::integrate(azim, 0.0, two_pi, 5, 1e-12);
        };
        return r * r * gauss_kronrod<double, 31>::integrate(polar, -1.0, 1.0, 5, 1e-12);
    };
    return gauss_kronrod<double, 31>::integrate(shell, 0.0, rmax, 8, 1e-11);
}

// Fourth-order central difference.
inline std::complex<double> derivative(const std::function<std::complex<double>(double)>& f, double x, double h) {
    return (-f(x + 2 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2 * h)) / (12.0 * h);
}

inline std::complex<double> second_derivative(const std::function<std::complex<double>(double)>& f, double x,
                                              double h) {
    return (-f(x + 2 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) - f(x - 2 * h)) / (12.0 * h * h);
}

// Random amplitude vanishing on the kz-axis: axial factor x complex polynomial
// of degree <= 2 x anisotropic Gaussian envelope near the origin.
inline rsur::AmplitudePtr random_amplitude(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> width(0.6, 1.6);
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_int_distribution<int> power(0, 2);
    std::uniform_int_distribution<int> count(1, 3);

    std::vector<rsur::Monomial> poly;
    const int terms = count(rng);
    for (int i = 0; i < terms; ++i) {
        rsur::Monomial m;
        m.px = power(rng);
        m.py = power(rng) % (3 - m.px);
        m.pz = power(rng) % (3 - m.px - m.py);
        m.coeff = {unit(rng), unit(rng)};
        poly.push_back(m);
    }
    rsur::GaussianEnvelope env;
    env.center = rsur::Vec3(0.4 * unit(rng), 0.4 * unit(rng), 0.4 * unit(rng));
    env.width = rsur::Vec3(width(rng), width(rng), width(rng));
    return std::make_shared<rsur::GaussianPolynomialAmplitude>(static_cast<rsur::AxialFactor>(pick(rng)),
                                                               std::move(poly), env);
}

inline rsur::HelicityAmplitudePair random_pair(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> which(0, 3);
    rsur::HelicityAmplitudePair p;
    switch (which(rng)) {
        case 0: p.plus = random_amplitude(rng); break;
        case 1: p.minus = random_amplitude(rng); break;
        default:
            p.plus = random_amplitude(rng);
            p.minus = random_amplitude(rng);
    }
    return p;
}

}  // namespace oracle
