#include "rsur/eigensolver.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include <lapacke.h>
#include <nlohmann/json.hpp>

#include "rsur/errors.hpp"
#include "rsur/specfun.hpp"

namespace rsur::radial {
namespace {

double potential(double k) {
    return 1.0 / (k * k) + 0.5 * k * k;
}

// Number of local wavelengths the grid must resolve: h * sqrt(2 gamma) <= this.
constexpr double kMaxPhasePerStep = 0.25;
// Room between the classical turning point and kappa_max for the Gaussian tail.
constexpr double kTailMargin = 4.0;

void check_resolvable(const RadialProblem& p, std::size_t n_states) {
    if (n_states == 0) throw ResolutionError("at least one state must be requested");
    const double gamma = analytic_eigenvalue(static_cast<unsigned>(n_states - 1));
    const double turning = std::sqrt(2.0 * gamma);
    if (turning + kTailMargin > p.kappa_max) {
        throw ResolutionError("kappa_max too small for " + std::to_string(n_states) + " states");
    }
    if (p.spacing() * turning > kMaxPhasePerStep) {
        throw ResolutionError("too few grid points for " + std::to_string(n_states) + " states");
    }
}

// Derivative at x of the Lagrange basis polynomials on nodes 0..6.
std::array<double, 7> lagrange_derivative_weights(double x) {
    std::array<double, 7> w{};
    for (int m = 0; m < 7; ++m) {
        for (int q = 0; q < 7; ++q) {
            if (q == m) continue;
            double prod = 1.0 / (m - q);
            for (int r = 0; r < 7; ++r) {
                if (r != m && r != q) prod *= (x - r) / (m - r);
            }
            w[m] += prod;
        }
    }
    return w;
}

// Sixth-order first derivative: central stencil inside, 7-point one-sided near the ends.
std::vector<double> derivative6(std::span<const double> u, double h) {
    const std::size_t n = u.size();
    std::vector<double> d(n);
    for (std::size_t i = 3; i + 3 < n; ++i) {
        d[i] = (45.0 * (u[i + 1] - u[i - 1]) - 9.0 * (u[i + 2] - u[i - 2]) + (u[i + 3] - u[i - 3])) / (60.0 * h);
    }
    for (std::size_t i = 0; i < 3; ++i) {
        const auto w = lagrange_derivative_weights(static_cast<double>(i));
        double lo = 0.0, hi = 0.0;
        for (std::size_t m = 0; m < 7; ++m) {
            lo += w[m] * u[m];
            hi -= w[m] * u[n - 1 - m];  // mirrored nodes flip the sign
        }
        d[i] = lo / h;
        d[n - 1 - i] = hi / h;
    }
    return d;
}

}  // namespace

void RadialProblem::validate() const {
    if (!(kappa_max >= 8.0) || !std::isfinite(kappa_max)) throw ResolutionError("kappa_max must be >= 8");
    if (n_points < 200) throw ResolutionError("n_points must be >= 200");
}

double analytic_eigenvalue(unsigned n) {
    return 2.5 + 2.0 * n;
}

double analytic_eigenfunction(unsigned n, double kappa) {
    if (!(kappa >= 0.0)) throw DomainError("analytic_eigenfunction: kappa must be >= 0");
    const double k2 = kappa * kappa;
    return kappa * std::exp(-0.5 * k2) * specfun::laguerre(n, 1.5, k2);
}

RadialSpectrum solve_radial(const RadialProblem& problem, std::size_t n_states) {
    problem.validate();
    check_resolvable(problem, n_states);
    const std::size_t n = problem.n_points;
    const double h = problem.spacing();
    const double h2 = h * h;

    std::vector<double> diag(n), off(n - 1);
    for (std::size_t i = 0; i < n; ++i) diag[i] = 1.0 / h2 + potential(static_cast<double>(i + 1) * h);
    for (std::size_t i = 0; i + 1 < n; ++i) off[i] = -0.5 / h2;

    const lapack_int nn = static_cast<lapack_int>(n);
    const lapack_int m_req = static_cast<lapack_int>(n_states);
    std::vector<double> d = diag, e = off;
    e.push_back(0.0);
    std::vector<double> w(n), z(n * n_states);
    std::vector<lapack_int> support(2 * n_states);
    lapack_int found = 0;
    const lapack_int info = LAPACKE_dstevr(LAPACK_COL_MAJOR, 'V', 'I', nn, d.data(), e.data(), 0.0, 0.0, 1, m_req,
                                           0.0, &found, w.data(), z.data(), nn, support.data());
    if (info != 0 || found != m_req) throw ResolutionError("tridiagonal eigensolver failed");

    RadialSpectrum out;
    out.problem = problem;
    out.kappa.resize(n + 2);
    for (std::size_t i = 0; i < n + 2; ++i) out.kappa[i] = static_cast<double>(i) * h;
    for (std::size_t s = 0; s < n_states; ++s) {
        const double* u = z.data() + s * n;
        double norm2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) norm2 += u[i] * u[i];
        double sign = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (std::fabs(u[i]) > 1e-8 * std::sqrt(norm2)) {
                sign = u[i] > 0.0 ? 1.0 : -1.0;
                break;
            }
        }
        const double scale = sign / std::sqrt(norm2 * h);  // h sum u^2 = int k^2 g^2 = 1

        std::vector<double> g(n + 2, 0.0);
        for (std::size_t i = 0; i < n; ++i) g[i + 1] = scale * u[i] / out.kappa[i + 1];

        double res = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double hu = diag[i] * u[i];
            if (i > 0) hu += off[i - 1] * u[i - 1];
            if (i + 1 < n) hu += off[i] * u[i + 1];
            res += (hu - w[s] * u[i]) * (hu - w[s] * u[i]);
        }
        out.eigenvalues.push_back(w[s]);
        out.residuals.push_back(std::sqrt(res / norm2));
        out.eigenfunctions.push_back(std::move(g));
    }
    return out;
}

double rayleigh_quotient(std::span<const double> kappa, std::span<const double> g) {
    const std::size_t n = kappa.size();
    if (g.size() != n) throw ShapeError("rayleigh_quotient: kappa and g differ in length");
    if (n < 8) throw ShapeError("rayleigh_quotient: need at least 8 samples");
    if (!(kappa[0] >= 0.0)) throw DomainError("rayleigh_quotient: kappa must be >= 0");
    const double h = (kappa[n - 1] - kappa[0]) / static_cast<double>(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
        if (std::fabs(kappa[i] - kappa[i - 1] - h) > 1e-9 * h) throw ShapeError("rayleigh_quotient: grid not uniform");
    }
    std::vector<double> u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = kappa[i] * g[i];
    const std::vector<double> du = derivative6(u, h);

    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
        const double k = kappa[i];
        // (1/k^2) u^2 = g^2, finite at k = 0
        num += w * (0.5 * du[i] * du[i] + g[i] * g[i] + 0.5 * k * k * u[i] * u[i]);
        den += w * u[i] * u[i];
    }
    if (!(den > 0.0)) throw DegenerateNormError("rayleigh_quotient: zero function");
    return num / den;
}

double richardson(double coarse, double fine) {
    return (4.0 * fine - coarse) / 3.0;
}

std::vector<double> extrapolated_eigenvalues(const RadialProblem& problem, std::size_t n_states) {
    const RadialSpectrum coarse = solve_radial(problem, n_states);
    RadialProblem half = problem;
    half.n_points = 2 * problem.n_points + 1;
    const RadialSpectrum fine = solve_radial(half, n_states);
    std::vector<double> out(n_states);
    for (std::size_t s = 0; s < n_states; ++s) out[s] = richardson(coarse.eigenvalues[s], fine.eigenvalues[s]);
    return out;
}

void to_json(nlohmann::json& j, const RadialSpectrum& s) {
    j = nlohmann::json{{"eigenvalues", s.eigenvalues},
                       {"residuals", s.residuals},
                       {"grid",
                        {{"kappa_max", s.problem.kappa_max},
                         {"n_points", s.problem.n_points},
                         {"spacing", s.problem.spacing()}}}};
}

std::string eigenfunctions_csv(const RadialSpectrum& s) {
    std::ostringstream os;
    os.precision(17);
    os << "kappa";
    for (std::size_t n = 0; n < s.eigenfunctions.size(); ++n) os << ",g" << n;
    os << '\n';
    for (std::size_t i = 0; i < s.kappa.size(); ++i) {
        os << s.kappa[i];
        for (const auto& g : s.eigenfunctions) os << ',' << g[i];
        os << '\n';
    }
    return os.str();
}

}  // namespace rsur::radial
