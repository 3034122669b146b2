#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "rsur/types.hpp"

namespace rsur {

enum class Space { Position, Wavevector };

std::string_view to_string(Space space);
Space space_from_string(std::string_view name);

/// Uniform samples origin + i * spacing, i = 0 .. count-1.
struct Axis {
    std::size_t count = 0;
    double spacing = 0.0;
    double origin = 0.0;

    [[nodiscard]] double coord(std::size_t i) const { return origin + static_cast<double>(i) * spacing; }
    bool operator==(const Axis&) const = default;
};

/// Cartesian grid descriptor. Axis order x, y, z; node index i + nx*(j + ny*k).
class Grid3 {
public:
    Grid3() = default;
    explicit Grid3(std::array<Axis, 3> axes);

    /// n^3 grid covering [-extent/2, extent/2]^3 with nodes at cell centres,
    /// so no node lies on a coordinate axis when n is even.
    static Grid3 centered(std::size_t n, double extent);

    /// Fourier partner: spacing 2*pi/(n*h) per axis, nodes at half-offset
    /// positions symmetric about zero.
    [[nodiscard]] Grid3 reciprocal() const;

    /// True when `other` can be the Fourier partner of this grid.
    [[nodiscard]] bool is_fourier_pair(const Grid3& other) const;

    [[nodiscard]] const Axis& axis(std::size_t d) const { return axes_[d]; }
    [[nodiscard]] const std::array<Axis, 3>& axes() const { return axes_; }
    [[nodiscard]] std::size_t size() const;
    [[nodiscard]] double cell_volume() const;
    [[nodiscard]] std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
        return i + axes_[0].count * (j + axes_[1].count * k);
    }
    [[nodiscard]] Vec3 point(std::size_t i, std::size_t j, std::size_t k) const {
        return {axes_[0].coord(i), axes_[1].coord(j), axes_[2].coord(k)};
    }
    [[nodiscard]] Vec3 point(std::size_t flat) const;

    bool operator==(const Grid3&) const = default;

private:
    std::array<Axis, 3> axes_{};
};

/// Complex 3-vector field sampled on a Grid3. Values are stored interleaved
/// (Fx, Fy, Fz per node) with x fastest, matching the .rsf payload order.
class FieldGrid {
public:
    FieldGrid(Grid3 grid, Space space, std::vector<cplx> values);

    /// Samples fn(point) at every node.
    template <class Fn>
    static FieldGrid sample(const Grid3& grid, Space space, Fn&& fn) {
        std::vector<cplx> values(grid.size() * 3);
        std::size_t flat = 0;
        for (std::size_t k = 0; k < grid.axis(2).count; ++k) {
            for (std::size_t j = 0; j < grid.axis(1).count; ++j) {
                for (std::size_t i = 0; i < grid.axis(0).count; ++i, ++flat) {
                    const CVec3 v = fn(grid.point(i, j, k));
                    values[3 * flat] = v.x();
                    values[3 * flat + 1] = v.y();
                    values[3 * flat + 2] = v.z();
                }
            }
        }
        return FieldGrid(grid, space, std::move(values));
    }

    [[nodiscard]] const Grid3& grid() const { return grid_; }
    [[nodiscard]] Space space() const { return space_; }
    [[nodiscard]] std::span<const cplx> values() const { return values_; }
    [[nodiscard]] std::size_t node_count() const { return grid_.size(); }
    [[nodiscard]] CVec3 at(std::size_t flat) const {
        return {values_[3 * flat], values_[3 * flat + 1], values_[3 * flat + 2]};
    }

    /// Sum over nodes of F*.F times the cell volume.
    [[nodiscard]] double energy() const;

private:
    Grid3 grid_;
    Space space_;
    std::vector<cplx> values_;
};

/// Relative L2 distance ||a - b|| / ||b|| over all components.
double relative_l2(const FieldGrid& a, const FieldGrid& b);

}  // namespace rsur
