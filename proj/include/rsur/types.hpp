#pragma once

#include <complex>

#include <Eigen/Core>

namespace rsur {

using cplx = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;

/// a x b without conjugation (Eigen's cross() conjugates complex results).
inline CVec3 cross(const CVec3& a, const CVec3& b) {
    return {a.y() * b.z() - a.z() * b.y(), a.z() * b.x() - a.x() * b.z(), a.x() * b.y() - a.y() * b.x()};
}

/// Wavevector (units 1/length). c = 1 throughout the library.
struct WaveVector {
    double kx = 0.0;
    double ky = 0.0;
    double kz = 0.0;

    WaveVector() = default;
    WaveVector(double x, double y, double z) : kx(x), ky(y), kz(z) {}
    explicit WaveVector(const Vec3& v) : kx(v.x()), ky(v.y()), kz(v.z()) {}

    [[nodiscard]] double magnitude() const;
    [[nodiscard]] double perp() const;
    [[nodiscard]] Vec3 vec() const { return {kx, ky, kz}; }
    [[nodiscard]] WaveVector operator-() const { return {-kx, -ky, -kz}; }
};

}  // namespace rsur
