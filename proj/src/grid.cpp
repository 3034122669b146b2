#include "rsur/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rsur/errors.hpp"

namespace rsur {

std::string_view to_string(Space space) {
    return space == Space::Position ? "position" : "wavevector";
}

Space space_from_string(std::string_view name) {
    if (name == "position") return Space::Position;
    if (name == "wavevector") return Space::Wavevector;
    throw FormatError("unknown space tag '" + std::string(name) + "'");
}

Grid3::Grid3(std::array<Axis, 3> axes) : axes_(axes) {
    for (const auto& a : axes_) {
        if (a.count < 2) throw ShapeError("grid axes need at least 2 points");
        if (!(a.spacing > 0.0) || !std::isfinite(a.spacing)) throw ShapeError("grid spacing must be positive");
        if (!std::isfinite(a.origin)) throw ShapeError("grid origin must be finite");
    }
}

Grid3 Grid3::centered(std::size_t n, double extent) {
    if (!(extent > 0.0)) throw ShapeError("grid extent must be positive");
    const double h = extent / static_cast<double>(n);
    const Axis a{n, h, -0.5 * extent + 0.5 * h};
    return Grid3({a, a, a});
}

Grid3 Grid3::reciprocal() const {
    std::array<Axis, 3> out{};
    for (std::size_t d = 0; d < 3; ++d) {
        const auto n = axes_[d].count;
        const double dk = 2.0 * std::numbers::pi / (static_cast<double>(n) * axes_[d].spacing);
        out[d] = Axis{n, dk, -0.5 * static_cast<double>(n) * dk + 0.5 * dk};
    }
    return Grid3(out);
}

bool Grid3::is_fourier_pair(const Grid3& other) const {
    for (std::size_t d = 0; d < 3; ++d) {
        const auto n = axes_[d].count;
        if (other.axes_[d].count != n) return false;
        const double product = axes_[d].spacing * other.axes_[d].spacing * static_cast<double>(n);
        if (std::fabs(product / (2.0 * std::numbers::pi) - 1.0) > 1e-12) return false;
    }
    return true;
}

std::size_t Grid3::size() const {
    return axes_[0].count * axes_[1].count * axes_[2].count;
}

double Grid3::cell_volume() const {
    return axes_[0].spacing * axes_[1].spacing * axes_[2].spacing;
}

Vec3 Grid3::point(std::size_t flat) const {
    const auto nx = axes_[0].count, ny = axes_[1].count;
    return point(flat % nx, (flat / nx) % ny, flat / (nx * ny));
}

FieldGrid::FieldGrid(Grid3 grid, Space space, std::vector<cplx> values)
    : grid_(std::move(grid)), space_(space), values_(std::move(values)) {
    if (values_.size() != grid_.size() * 3) {
        throw ShapeError("field has " + std::to_string(values_.size()) + " complex entries, grid needs " +
                         std::to_string(grid_.size() * 3));
    }
}

double FieldGrid::energy() const {
    // pairwise-ish: accumulate per z-slab, then sum slabs
    const std::size_t slab = grid_.axis(0).count * grid_.axis(1).count * 3;
    double total = 0.0;
    for (std::size_t start = 0; start < values_.size(); start += slab) {
        double s = 0.0;
        for (std::size_t i = start; i < start + slab; ++i) s += std::norm(values_[i]);
        total += s;
    }
    return total * grid_.cell_volume();
}

double relative_l2(const FieldGrid& a, const FieldGrid& b) {
    if (a.values().size() != b.values().size()) throw ShapeError("relative_l2: size mismatch");
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.values().size(); ++i) {
        num += std::norm(a.values()[i] - b.values()[i]);
        den += std::norm(b.values()[i]);
    }
    return std::sqrt(num / den);
}

}  // namespace rsur
