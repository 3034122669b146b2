#include "rsur/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "rsur/errors.hpp"
#include "rsur/kspace.hpp"
#include "rsur/moments.hpp"

namespace rsur {

FieldGrid evolve(const HelicityAmplitudePair& amps, const Grid3& kgrid, double t) {
    return fourier_to_position(synthesize_kspace(amps, kgrid, t));
}

double Trajectory::norm_drift() const {
    double worst = 0.0;
    for (double n : norms) worst = std::max(worst, std::fabs(n - norm) / norm);
    return worst;
}

Trajectory spreading_trajectory(const HelicityAmplitudePair& amps, const Grid3& kgrid, std::span<const double> times) {
    if (times.empty()) throw FitError("spreading_trajectory: no times given");
    Trajectory tr;
    for (double t : times) {
        const FieldGrid field = evolve(amps, kgrid, t);
        tr.times.push_back(t);
        tr.norms.push_back(norm(field));
        tr.second_moments.push_back(variance_position(field));
        if (boundary_density_ratio(field) > kTruncationThreshold) tr.truncated = true;
    }
    tr.norm = tr.norms.front();
    return tr;
}

Trajectory analytic_trajectory(const HelicityAmplitudePair& amps, std::span<const double> times) {
    if (times.empty()) throw FitError("analytic_trajectory: no times given");
    Trajectory tr;
    for (double t : times) {
        const HelicityAmplitudePair evolved = evolve_amplitudes(amps, t);
        const PositionVarianceTerms terms = position_variance_terms(evolved);
        tr.times.push_back(t);
        tr.norms.push_back(terms.norm);
        tr.second_moments.push_back(terms.total());
    }
    tr.norm = tr.norms.front();
    return tr;
}

QuadraticFit fit_quadratic(std::span<const double> t, std::span<const double> y) {
    if (t.size() != y.size()) throw FitError("fit_quadratic: length mismatch");
    if (t.size() < 5) throw FitError("fit_quadratic: at least 5 samples are required");
    const auto n = static_cast<Eigen::Index>(t.size());
    Eigen::MatrixXd a(n, 3);
    Eigen::VectorXd b(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double ti = t[static_cast<std::size_t>(i)];
        a(i, 0) = 1.0;
        a(i, 1) = ti;
        a(i, 2) = ti * ti;
        b(i) = y[static_cast<std::size_t>(i)];
    }
    const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
    if (qr.rank() < 3) throw FitError("fit_quadratic: fewer than 3 distinct times");
    const Eigen::Vector3d c = qr.solve(b);
    QuadraticFit fit{c(0), c(1), c(2), 0.0};
    const double scale = b.norm();
    fit.residual = scale > 0.0 ? (a * c - b).norm() / scale : 0.0;
    return fit;
}

void to_json(nlohmann::json& j, const Trajectory& tr) {
    j = nlohmann::json{{"times", tr.times},
                       {"second_moments", tr.second_moments},
                       {"norms", tr.norms},
                       {"norm", tr.norm},
                       {"truncated", tr.truncated}};
}

void to_json(nlohmann::json& j, const QuadraticFit& fit) {
    j = nlohmann::json{{"alpha", fit.alpha},
                       {"beta", fit.beta},
                       {"gamma", fit.gamma},
                       {"acceleration", fit.acceleration()},
                       {"residual", fit.residual}};
}

std::string trajectory_csv(const Trajectory& tr) {
    std::ostringstream os;
    os.precision(17);
    os << "t,second_moment,norm\n";
    for (std::size_t i = 0; i < tr.times.size(); ++i) {
        os << tr.times[i] << ',' << tr.second_moments[i] << ',' << tr.norms[i] << '\n';
    }
    return os.str();
}

}  // namespace rsur
