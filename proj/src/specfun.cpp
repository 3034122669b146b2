#include "rsur/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "rsur/errors.hpp"

namespace rsur::specfun {
namespace {

// Below this |w| the positive-term Maclaurin series of int_0^w exp(t^2) dt is
// used; above it the asymptotic series, whose smallest term there is ~1e-18.
constexpr double kAsymptoticStart = 6.5;

void require_finite(double w, const char* what) {
    if (!std::isfinite(w)) {
        throw DomainError(std::string(what) + ": argument must be finite");
    }
}

// int_0^w exp(t^2) dt = sum_n w^(2n+1) / (n! (2n+1)), all terms positive.
double exp_square_integral(double w) {
    const double w2 = w * w;
    double power = w;  // w^(2n+1) / n!
    double sum = w;
    for (int n = 1; n < 400; ++n) {
        power *= w2 / n;
        const double term = power / (2 * n + 1);
        sum += term;
        if (n > w2 && term < 1e-17 * sum) break;
    }
    return sum;
}

// exp(-w^2) with the rounding error of w*w folded back in.
double exp_minus_square(double w) {
    const double w2 = w * w;
    const double low = std::fma(w, w, -w2);
    return std::exp(-w2) * (1.0 - low);
}

// D(w) ~ 1/(2w) sum_n (2n-1)!! / (2w^2)^n, truncated at the smallest term.
double dawson_asymptotic(double w) {
    const double x = 1.0 / (2.0 * w * w);
    double term = 1.0;
    double sum = 1.0;
    for (int n = 1; n < 200; ++n) {
        const double next = term * (2 * n - 1) * x;
        if (next >= term) break;
        term = next;
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    return sum / (2.0 * w);
}

}  // namespace

double dawson(double w) {
    require_finite(w, "dawson");
    const double aw = std::fabs(w);
    const double value = aw < kAsymptoticStart
                             ? exp_minus_square(aw) * exp_square_integral(aw)
                             : dawson_asymptotic(aw);
    return w < 0 ? -value : value;
}

double erfi_overflow_threshold() {
    // erfi(w) = 2/sqrt(pi) exp(w^2) D(w); solve w^2 + log(2 D(w) / sqrt(pi)) = log(DBL_MAX).
    static const double threshold = [] {
        const double log_max = std::log(std::numeric_limits<double>::max());
        double w = std::sqrt(log_max);
        for (int i = 0; i < 50; ++i) {
            w = std::sqrt(log_max - std::log(2.0 * dawson_asymptotic(w) / std::sqrt(std::numbers::pi)));
        }
        // stay strictly inside the representable range
        return w * (1.0 - 1e-12);
    }();
    return threshold;
}

double erfi(double w) {
    require_finite(w, "erfi");
    const double aw = std::fabs(w);
    if (aw > erfi_overflow_threshold()) {
        throw OverflowError("erfi: |w| = " + std::to_string(aw) + " overflows double precision");
    }
    constexpr double two_over_sqrt_pi = 2.0 / 1.7724538509055160273;
    double value;
    if (aw < kAsymptoticStart) {
        value = two_over_sqrt_pi * exp_square_integral(aw);
    } else {
        // exp(w^2) alone overflows before erfi does; combine in log space
        value = std::exp(aw * aw + std::log(two_over_sqrt_pi * dawson_asymptotic(aw)));
    }
    if (!std::isfinite(value)) {
        throw OverflowError("erfi: result overflows double precision");
    }
    return w < 0 ? -value : value;
}

double laguerre(unsigned n, double alpha, double x) {
    if (!std::isfinite(alpha) || !std::isfinite(x)) {
        throw DomainError("laguerre: arguments must be finite");
    }
    double prev = 1.0;
    if (n == 0) return prev;
    double curr = 1.0 + alpha - x;
    for (unsigned k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0 + alpha - x) * curr - (k + alpha) * prev) / (k + 1.0);
        prev = curr;
        curr = next;
    }
    return curr;
}

}  // namespace rsur::specfun
